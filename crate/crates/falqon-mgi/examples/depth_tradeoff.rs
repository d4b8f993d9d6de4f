//! Circuit depth versus outer iterations: on instances where the shallow
//! protocol works well, a 2-layer circuit restarted from measured
//! marginals closes 90% of the energy gap within 30 iterations, while a
//! plain feedback circuit needs on the order of a hundred layers for the
//! same target.
//!
//! Run with: cargo run --example depth_tradeoff

use falqon_mgi::falqon::{depth_to_target, FalqonParams};
use falqon_mgi::harness::{falqon_baseline, prepare_instance, run_rng, TARGET_GAP};
use falqon_mgi::mgi::{run_mgi_with_table, DtSchedule, MgiConfig, NSchedule};
use falqon_mgi::WeightedGraph;

fn main() -> falqon_mgi::Result<()> {
    println!("target: normalized energy gap <= {TARGET_GAP}\n");
    println!("graph seed   plain-feedback layers   guided iterations (2-layer circuit)");
    for seed in [900u64, 905, 924, 936, 942] {
        let graph = WeightedGraph::random_complete(8, seed)?;
        let instance = prepare_instance(&graph, Some(0), 0.25)?;

        let baseline = falqon_baseline(
            std::slice::from_ref(&graph),
            Some(0),
            0.25,
            &FalqonParams::new(300, 0.2),
            TARGET_GAP,
        )?;

        let config = MgiConfig::new(
            30,
            FalqonParams::new(2, 0.4),
            2000,
            NSchedule::Linear { n_max: 30, n_min: 5 },
            DtSchedule::Constant(0.4),
        );
        let mut rng = run_rng(7, seed, 0, 0);
        let trace = run_mgi_with_table(&config, &instance.table, &instance.optima, &mut rng)?;
        let mut energies = vec![instance.e_uniform];
        energies.extend(trace.iterations.iter().map(|it| it.final_energy));
        let iterations = depth_to_target(&energies, instance.e_star, TARGET_GAP);

        let fmt = |v: Option<usize>| v.map_or("never".to_string(), |d| d.to_string());
        println!(
            "{seed:10}   {:>21}   {:>18}",
            fmt(baseline[0].depth_to_target),
            fmt(iterations)
        );
    }
    Ok(())
}
