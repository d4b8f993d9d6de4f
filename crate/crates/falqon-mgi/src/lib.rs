//! Exact state-vector simulation of feedback-based quantum optimization
//! (FALQON) on weighted MaxCut, plus measurement-guided initialization:
//! an outer loop that converts the dominant measurement outcomes of a
//! shallow run into a biased product-state restart.
//!
//! The crate is organized along the pipeline:
//!
//! - [`graph`]: weighted instances, edge-list I/O, cut values, the QUBO
//!   form, and an exhaustive MaxCut oracle.
//! - [`ising`]: diagonal cost Hamiltonians (full register or reduced by
//!   pinning one vertex) and their energy tables.
//! - [`qstate`]: the dense state-vector engine with the two layer
//!   unitaries, exact expectations, and shot sampling.
//! - [`falqon`]: the inner feedback loop choosing each layer's driver
//!   weight from a commutator expectation.
//! - [`mgi`]: shot filtering, marginal estimation, restart-angle
//!   computation, schedules, and the product-projection diagnostics.
//! - [`harness`]: seeded parameter sweeps over instance sets with
//!   deterministic aggregation and CSV/JSON emission.
//! - [`cli`]: the `falqon-mgi` binary's command definitions.
//!
//! The runnable programs under `examples/` walk through each capability;
//! start with `examples/falqon_baseline.rs` and `examples/mgi_shallow.rs`.

pub mod cli;
pub mod error;
pub mod falqon;
pub mod graph;
pub mod harness;
pub mod ising;
pub mod mgi;
pub mod qstate;

pub use error::{Error, Result};
pub use falqon::{depth_to_target, run_falqon, run_falqon_with_table, FalqonParams, FalqonTrace};
pub use graph::{Assignment, QuboMatrix, WeightedGraph};
pub use ising::{EnergyTable, IsingHamiltonian};
pub use mgi::{run_mgi, run_mgi_with_table, DtSchedule, MgiConfig, MgiTrace, NSchedule};
pub use qstate::{BitstringCounts, StateVector};
