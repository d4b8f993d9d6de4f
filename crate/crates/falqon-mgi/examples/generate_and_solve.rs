//! Instance basics: generate a weighted complete graph, round-trip it
//! through the edge-list format, solve it exhaustively, and cross-check
//! the cut value against the QUBO form and the Ising energy.
//!
//! Run with: cargo run --example generate_and_solve

use falqon_mgi::graph::{Assignment, WeightedGraph};
use falqon_mgi::ising::IsingHamiltonian;

fn main() -> falqon_mgi::Result<()> {
    let graph = WeightedGraph::random_complete(8, 7)?;
    println!(
        "complete graph: {} vertices, {} edges, total weight {:.4}",
        graph.n_vertices(),
        graph.edges().len(),
        graph.total_weight()
    );

    let text = graph.to_edge_list_string();
    let parsed = WeightedGraph::parse_edge_list(&text)?;
    println!("edge-list round trip bit-exact: {}", parsed == graph);

    let (max_cut, optima) = graph.brute_force_maxcut()?;
    println!("max cut {max_cut:.6} attained by:");
    for a in &optima {
        println!("  {a}");
    }

    // The quadratic form and the polynomial cut formula agree everywhere.
    let qubo = graph.qubo_matrix();
    let worst = (0..(1u64 << 8))
        .map(|mask| {
            let a = Assignment::from_index(mask, 8);
            (graph.cut_value(&a).unwrap() - qubo.evaluate(&a).unwrap()).abs()
        })
        .fold(0.0f64, f64::max);
    println!("max |cut - x^T Q x| over all 256 assignments: {worst:.2e}");

    // Energy of any bitstring is total weight minus twice its cut value.
    let table = IsingHamiltonian::from_graph_full(&graph, 1.0).energy_table()?;
    let (ground, states) = table.ground_states();
    println!("full-register ground energy {ground:.6} on {} states", states.len());

    // Pinning vertex 0 removes the mirror degeneracy and one qubit.
    let reduced = IsingHamiltonian::from_graph_reduced(&graph, 0, 1.0)?.energy_table()?;
    let (reduced_ground, reduced_states) = reduced.ground_states();
    println!(
        "reduced register: {} qubits, ground energy {:.6} on {} state(s)",
        reduced.n_qubits(),
        reduced_ground,
        reduced_states.len()
    );
    Ok(())
}
