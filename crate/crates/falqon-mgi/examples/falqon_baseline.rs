//! Deep feedback run on one instance: the energy descends monotonically
//! layer by layer, and reaching 90% of the achievable improvement takes on
//! the order of a hundred layers. Also shows the time-step search that
//! picks the largest step preserving the descent.
//!
//! Run with: cargo run --example falqon_baseline

use falqon_mgi::falqon::{depth_to_target, run_falqon_with_table, FalqonParams};
use falqon_mgi::harness::{monotonicity_check, prepare_instance, TARGET_GAP};
use falqon_mgi::qstate::StateVector;
use falqon_mgi::WeightedGraph;

fn main() -> falqon_mgi::Result<()> {
    let graph = WeightedGraph::random_complete(8, 7)?;
    let instance = prepare_instance(&graph, Some(0), 0.25)?;
    let psi0 = StateVector::uniform(instance.table.n_qubits())?;

    let params = FalqonParams::new(200, 0.2);
    let trace = run_falqon_with_table(&instance.table, psi0.clone(), &params)?;

    println!("ground energy {:.6}", instance.e_star);
    println!("layer   driver weight      energy");
    for layer in [0usize, 1, 2, 5, 10, 20, 50, 100, 150, 200] {
        let beta = if layer == 0 { f64::NAN } else { trace.betas[layer - 1] };
        println!("{layer:5}   {beta:13.6}   {:9.6}", trace.energies[layer]);
    }

    let monotone = trace.energies.windows(2).all(|p| p[1] <= p[0] + 1e-9);
    println!("monotone descent: {monotone}");

    match depth_to_target(&trace.energies, instance.e_star, TARGET_GAP) {
        Some(depth) => println!("gap closed to {TARGET_GAP} at layer {depth}"),
        None => println!("gap never closed to {TARGET_GAP} within {} layers", params.layers),
    }

    let candidates = [0.05, 0.1, 0.15, 0.2, 0.25, 0.3];
    let best = monotonicity_check(&instance.table, &psi0, &candidates, 200, 1.0)?;
    println!("largest monotone time step among {candidates:?}: {best:?}");
    Ok(())
}
