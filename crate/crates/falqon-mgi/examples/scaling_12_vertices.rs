//! A larger instance: 12 vertices (11 simulated qubits). The protocol
//! scales by ramping the time step down across iterations and starting
//! with a very wide filter that narrows as the distribution concentrates.
//!
//! Run with: cargo run --example scaling_12_vertices

use falqon_mgi::falqon::FalqonParams;
use falqon_mgi::harness::{falqon_baseline, prepare_instance, run_rng, TARGET_GAP};
use falqon_mgi::mgi::{run_mgi_with_table, DtSchedule, MgiConfig, NSchedule};
use falqon_mgi::WeightedGraph;

fn main() -> falqon_mgi::Result<()> {
    let graph = WeightedGraph::random_complete(12, 77)?;
    let instance = prepare_instance(&graph, Some(0), 0.25)?;
    println!(
        "12-vertex instance: {} qubits simulated, ground energy {:.6}",
        instance.table.n_qubits(),
        instance.e_star
    );

    let iterations = 60;
    let config = MgiConfig::new(
        iterations,
        FalqonParams::new(5, 0.055),
        2000,
        NSchedule::Linear { n_max: 200, n_min: 5 },
        DtSchedule::Linear { dt_start: 0.055, dt_end: 0.035 },
    );
    let mut rng = run_rng(7, 0, 0, 0);
    let trace = run_mgi_with_table(&config, &instance.table, &instance.optima, &mut rng)?;

    println!("\n5-layer circuit, {iterations} iterations, filter 200 -> 5, dt 0.055 -> 0.035");
    println!("iter    n     dt      energy      p(optimal)");
    for it in trace.iterations.iter().step_by(5).chain(trace.iterations.last()) {
        println!(
            "{:4}  {:3}  {:.4}  {:9.6}  {:.6}",
            it.iteration, it.n_used, it.dt_used, it.final_energy, it.success_probability
        );
    }

    let baseline = falqon_baseline(
        std::slice::from_ref(&graph),
        Some(0),
        0.25,
        &FalqonParams::new(800, 0.05),
        TARGET_GAP,
    )?;
    println!(
        "\nplain feedback at dt=0.05 closes the gap to {TARGET_GAP} at layer {:?}",
        baseline[0].depth_to_target
    );
    Ok(())
}
