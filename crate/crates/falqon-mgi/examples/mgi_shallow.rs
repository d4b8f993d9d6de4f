//! Measurement-guided initialization with a two-layer circuit: each outer
//! iteration measures the output, keeps the most frequent bitstrings on a
//! shrinking budget, and restarts from the product state matching their
//! per-qubit marginals. Energy falls and ground-state weight rises even
//! though the circuit never grows.
//!
//! Run with: cargo run --example mgi_shallow

use falqon_mgi::falqon::FalqonParams;
use falqon_mgi::harness::{prepare_instance, run_rng};
use falqon_mgi::mgi::{run_mgi_with_table, DtSchedule, MgiConfig, NSchedule};
use falqon_mgi::WeightedGraph;

fn main() -> falqon_mgi::Result<()> {
    let graph = WeightedGraph::random_complete(8, 42)?;
    let instance = prepare_instance(&graph, Some(0), 0.25)?;

    let config = MgiConfig::new(
        30,
        FalqonParams::new(2, 0.4),
        2000,
        NSchedule::Linear { n_max: 30, n_min: 5 },
        DtSchedule::Constant(0.4),
    );
    let mut rng = run_rng(1, 0, 0, 0);
    let trace = run_mgi_with_table(&config, &instance.table, &instance.optima, &mut rng)?;

    println!("ground energy {:.6}", instance.e_star);
    println!("iter   n    dt     energy      p(optimal)");
    for it in &trace.iterations {
        println!(
            "{:4}  {:3}  {:.2}  {:9.6}  {:.6}",
            it.iteration, it.n_used, it.dt_used, it.final_energy, it.success_probability
        );
    }
    let last = trace.iterations.last().unwrap();
    println!(
        "\nfinal state holds {:.1}% of its weight on the optimum after {} iterations of a 2-layer circuit",
        100.0 * last.success_probability,
        config.iterations
    );
    Ok(())
}
