//! The feedback loop: build the circuit layer by layer, choosing each
//! driver weight from the commutator expectation of the previous state so
//! the cost energy never increases for small enough time steps.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ising::{EnergyTable, IsingHamiltonian};
use crate::qstate::StateVector;

/// Where each layer's driver weight comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BetaSource {
    /// Exact commutator expectation from the state vector.
    #[default]
    ExactExpectation,
    /// Shot-estimated commutator; reserved, not implemented.
    Sampled,
}

/// Layer count, time step, and feedback gain for one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FalqonParams {
    pub layers: usize,
    pub dt: f64,
    pub alpha: f64,
    pub beta_source: BetaSource,
}

impl FalqonParams {
    pub fn new(layers: usize, dt: f64) -> Self {
        Self { layers, dt, alpha: 1.0, beta_source: BetaSource::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.layers == 0 {
            return Err(Error::InvalidArgument("layer count must be at least 1".into()));
        }
        if self.dt <= 0.0 || !self.dt.is_finite() {
            return Err(Error::InvalidArgument(format!("time step must be positive, got {}", self.dt)));
        }
        if self.alpha <= 0.0 || !self.alpha.is_finite() {
            return Err(Error::InvalidArgument(format!("gain must be positive, got {}", self.alpha)));
        }
        Ok(())
    }
}

/// Per-layer record of one run: `betas` has one entry per layer and
/// `energies` one more (the initial-state energy first).
#[derive(Debug, Clone)]
pub struct FalqonTrace {
    pub betas: Vec<f64>,
    pub energies: Vec<f64>,
    pub final_state: StateVector,
}

impl FalqonTrace {
    pub fn final_energy(&self) -> f64 {
        *self.energies.last().expect("trace has at least the initial energy")
    }
}

/// Runs the feedback loop against `hamiltonian`, materializing its diagonal
/// first. See [`run_falqon_with_table`].
pub fn run_falqon(
    hamiltonian: &IsingHamiltonian,
    initial: StateVector,
    params: &FalqonParams,
) -> Result<FalqonTrace> {
    let table = hamiltonian.energy_table()?;
    run_falqon_with_table(&table, initial, params)
}

/// Runs `params.layers` feedback layers from `initial`.
///
/// Each layer evaluates `beta = -alpha * <i[H_d, H_p]>` on the current
/// state, then applies the cost phase for `dt` followed by the driver
/// rotation for `beta * dt`. The first layer applies the same rule to the
/// initial state; on the uniform superposition the first beta is zero.
pub fn run_falqon_with_table(
    table: &EnergyTable,
    initial: StateVector,
    params: &FalqonParams,
) -> Result<FalqonTrace> {
    params.validate()?;
    if params.beta_source == BetaSource::Sampled {
        return Err(Error::Unsupported(
            "shot-estimated feedback is reserved but not implemented; use exact expectation".into(),
        ));
    }
    if table.len() != initial.len() {
        return Err(Error::InvalidArgument(format!(
            "diagonal has {} entries, state has {}",
            table.len(),
            initial.len()
        )));
    }
    initial.validate_norm()?;

    // The cost phase factors depend only on (table, dt); computed once.
    let phases: Vec<Complex64> = table
        .energies()
        .iter()
        .map(|&e| Complex64::from_polar(1.0, -e * params.dt))
        .collect();

    let mut state = initial;
    let mut betas = Vec::with_capacity(params.layers);
    let mut energies = Vec::with_capacity(params.layers + 1);
    energies.push(state.expect_cost(table)?);
    for _ in 0..params.layers {
        let beta = -params.alpha * state.expect_commutator(table)?;
        state.apply_phases(&phases);
        state.apply_driver(beta, params.dt);
        betas.push(beta);
        energies.push(state.expect_cost(table)?);
    }
    Ok(FalqonTrace { betas, energies, final_state: state })
}

/// Smallest index `l` whose normalized energy gap
/// `(E_l - e_star) / (E_0 - e_star)` is at most `delta0`, or `None` if the
/// trace never reaches it. A degenerate trace starting at `e_star` gives 0.
pub fn depth_to_target(energies: &[f64], e_star: f64, delta0: f64) -> Option<usize> {
    let e0 = *energies.first()?;
    let gap = e0 - e_star;
    if gap <= 0.0 {
        return Some(0);
    }
    energies.iter().position(|&e| (e - e_star) / gap <= delta0)
}
