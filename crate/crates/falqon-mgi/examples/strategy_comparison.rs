//! Filter-size strategies in the shallow regime, averaged over 100 seeded
//! runs on one instance: a fixed small budget, a fixed large budget, and a
//! ramp from large to small. The ramp explores broadly early and refines
//! late, and ends with the best mean ground-state weight.
//!
//! Run with: cargo run --example strategy_comparison

use falqon_mgi::harness::{run_grid, ExperimentSpec, GraphSource, GridAxes};
use falqon_mgi::mgi::{DtSchedule, NSchedule};

fn main() -> falqon_mgi::Result<()> {
    let spec = ExperimentSpec {
        graph_source: GraphSource::Generated { count: 1, n_vertices: 8, seed: 42 },
        fix_vertex: Some(0),
        scale: 0.25,
        grid: GridAxes {
            layers: vec![2],
            iterations: vec![30],
            n_schedules: vec![
                NSchedule::Fixed(5),
                NSchedule::Fixed(30),
                NSchedule::Linear { n_max: 30, n_min: 5 },
            ],
            dt_schedules: vec![DtSchedule::Constant(0.4)],
            shots: vec![2000],
            alphas: vec![1.0],
        },
        runs_per_cell: 100,
        master_seed: 7,
    };

    let out = run_grid(&spec, None)?;
    println!("2-layer circuit, 30 iterations, 2000 shots, 100 runs per strategy\n");
    println!("strategy          mean p(opt)   std     runs>0.5   mean energy");
    for cell in &out.cells {
        println!(
            "{:15}   {:.4}       {:.4}   {:6.2}%   {:9.6}",
            cell.cell.n_schedule.to_string(),
            cell.mean_success,
            cell.std_success,
            100.0 * cell.frac_above_half,
            cell.mean_final_energy
        );
    }
    Ok(())
}
