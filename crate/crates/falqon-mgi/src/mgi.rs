//! Measurement-guided initialization: an outer loop that measures the
//! output of a shallow feedback run, keeps the most frequent bitstrings,
//! converts their per-qubit marginals into rotation angles, and restarts
//! the next run from the resulting biased product state.
//!
//! The restart state is the closest product distribution to the filtered
//! shot record in Kullback-Leibler divergence; [`product_projection`] and
//! [`kl_divergence`] expose that view directly for diagnostics.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::falqon::{run_falqon_with_table, FalqonParams};
use crate::ising::{EnergyTable, IsingHamiltonian};
use crate::qstate::{BitstringCounts, StateVector};

/// How many of the most frequent bitstrings survive filtering at outer
/// iteration `r` of `total`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NSchedule {
    Fixed(usize),
    /// Linear ramp from `n_max` at the first iteration down to `n_min` at
    /// the last, floored to stay integer-valued.
    Linear { n_max: usize, n_min: usize },
}

impl NSchedule {
    pub fn validate(&self) -> Result<()> {
        match *self {
            NSchedule::Fixed(n) if n >= 1 => Ok(()),
            NSchedule::Fixed(n) => {
                Err(Error::InvalidArgument(format!("filter size must be at least 1, got {n}")))
            }
            NSchedule::Linear { n_max, n_min } if 1 <= n_min && n_min <= n_max => Ok(()),
            NSchedule::Linear { n_max, n_min } => Err(Error::InvalidArgument(format!(
                "filter ramp needs 1 <= n_min <= n_max, got {n_min}..{n_max}"
            ))),
        }
    }

    /// Filter size at iteration `r` (1-based) of `total`.
    pub fn n_at(&self, r: usize, total: usize) -> usize {
        debug_assert!(1 <= r && r <= total);
        match *self {
            NSchedule::Fixed(n) => n,
            NSchedule::Linear { n_max, .. } if total <= 1 => n_max,
            NSchedule::Linear { n_max, n_min } => {
                // floor(n_max - (n_max - n_min) * (r-1)/(total-1)), exactly.
                n_max - ((n_max - n_min) * (r - 1)).div_ceil(total - 1)
            }
        }
    }
}

impl fmt::Display for NSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NSchedule::Fixed(n) => write!(f, "fixed({n})"),
            NSchedule::Linear { n_max, n_min } => write!(f, "linear({n_max}->{n_min})"),
        }
    }
}

/// Time step used by the inner feedback run at each outer iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DtSchedule {
    Constant(f64),
    Linear { dt_start: f64, dt_end: f64 },
}

impl DtSchedule {
    pub fn validate(&self) -> Result<()> {
        let ok = |dt: f64| dt.is_finite() && dt > 0.0;
        match *self {
            DtSchedule::Constant(dt) if ok(dt) => Ok(()),
            DtSchedule::Linear { dt_start, dt_end } if ok(dt_start) && ok(dt_end) => Ok(()),
            _ => Err(Error::InvalidArgument(format!("time steps must be positive: {self}"))),
        }
    }

    /// Time step at iteration `r` (1-based) of `total`.
    pub fn dt_at(&self, r: usize, total: usize) -> f64 {
        debug_assert!(1 <= r && r <= total);
        match *self {
            DtSchedule::Constant(dt) => dt,
            DtSchedule::Linear { dt_start, .. } if total <= 1 => dt_start,
            DtSchedule::Linear { dt_start, dt_end } => {
                dt_start + (dt_end - dt_start) * (r - 1) as f64 / (total - 1) as f64
            }
        }
    }
}

impl fmt::Display for DtSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DtSchedule::Constant(dt) => write!(f, "constant({dt})"),
            DtSchedule::Linear { dt_start, dt_end } => write!(f, "linear({dt_start}->{dt_end})"),
        }
    }
}

/// Outer-loop configuration. The per-iteration time step comes from
/// `dt_schedule`, overriding `falqon.dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MgiConfig {
    /// Number of outer iterations.
    pub iterations: usize,
    /// Inner-run layer count, gain, and feedback source.
    pub falqon: FalqonParams,
    /// Measurement shots per outer iteration.
    pub shots: u64,
    pub n_schedule: NSchedule,
    pub dt_schedule: DtSchedule,
    /// Optional pull of marginals away from 0 and 1 before conversion to
    /// angles; 0 (the default) leaves them untouched. A marginal that is
    /// exactly 0 or 1 pins the qubit for the next restart.
    pub clamp_epsilon: f64,
}

impl MgiConfig {
    pub fn new(
        iterations: usize,
        falqon: FalqonParams,
        shots: u64,
        n_schedule: NSchedule,
        dt_schedule: DtSchedule,
    ) -> Self {
        Self { iterations, falqon, shots, n_schedule, dt_schedule, clamp_epsilon: 0.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::InvalidArgument("iteration count must be at least 1".into()));
        }
        if self.shots == 0 {
            return Err(Error::InvalidArgument("shot count must be at least 1".into()));
        }
        if !(0.0..0.5).contains(&self.clamp_epsilon) {
            return Err(Error::InvalidArgument(format!(
                "clamp epsilon must lie in [0, 0.5), got {}",
                self.clamp_epsilon
            )));
        }
        self.n_schedule.validate()?;
        self.dt_schedule.validate()?;
        self.falqon.validate()
    }
}

/// What one outer iteration produced. `angles` and `marginals` are the
/// values computed *from* this iteration's measurement, i.e. the restart
/// parameters for the next one; energy and success probability are exact
/// state-vector quantities of this iteration's final state.
#[derive(Debug, Clone)]
pub struct MgiIteration {
    pub iteration: usize,
    pub n_used: usize,
    pub dt_used: f64,
    pub angles: Vec<f64>,
    pub marginals: Vec<f64>,
    pub final_energy: f64,
    pub success_probability: f64,
}

#[derive(Debug, Clone)]
pub struct MgiTrace {
    pub iterations: Vec<MgiIteration>,
    /// Final state of the last iteration's inner run.
    pub final_state: StateVector,
}

/// The `n` distinct bitstrings of highest multiplicity, as
/// `(index, multiplicity)` pairs in selection order.
///
/// Ties at the boundary are broken toward lower energy, then lower index,
/// keeping the selection deterministic. If fewer than `n` distinct
/// outcomes were observed, all of them are returned.
pub fn top_n_filter(
    counts: &BitstringCounts,
    n: usize,
    table: &EnergyTable,
) -> Result<Vec<(usize, u64)>> {
    if n == 0 {
        return Err(Error::InvalidArgument("filter size must be at least 1".into()));
    }
    if counts.counts().is_empty() {
        return Err(Error::InvalidArgument("empty shot record".into()));
    }
    let mut entries: Vec<(usize, u64)> =
        counts.counts().iter().map(|(&idx, &m)| (idx, m)).collect();
    entries.sort_by(|&(ia, ma), &(ib, mb)| {
        mb.cmp(&ma)
            .then_with(|| table.energy(ia).total_cmp(&table.energy(ib)))
            .then_with(|| ia.cmp(&ib))
    });
    entries.truncate(n);
    Ok(entries)
}

/// Empirical probability that each qubit reads 1 across a filtered shot
/// record, weighted by multiplicity.
pub fn marginals(filtered: &[(usize, u64)], n_qubits: usize) -> Vec<f64> {
    let total: u64 = filtered.iter().map(|&(_, m)| m).sum();
    debug_assert!(total > 0, "marginals need a nonempty filtered set");
    (0..n_qubits)
        .map(|q| {
            let ones: u64 = filtered
                .iter()
                .filter(|&&(idx, _)| (idx >> q) & 1 == 1)
                .map(|&(_, m)| m)
                .sum();
            ones as f64 / total as f64
        })
        .collect()
}

/// Pulls each marginal into `[epsilon, 1 - epsilon]`; a no-op at 0.
pub fn clamp_marginals(marginals: &mut [f64], epsilon: f64) {
    for c in marginals {
        *c = c.max(epsilon).min(1.0 - epsilon);
    }
}

/// Rotation angles `2 asin(sqrt(c))` preparing a product state whose
/// per-qubit probability of 1 reproduces each marginal exactly.
pub fn angles_from_marginals(marginals: &[f64]) -> Result<Vec<f64>> {
    marginals
        .iter()
        .map(|&c| {
            if !(0.0..=1.0).contains(&c) {
                return Err(Error::InvalidArgument(format!(
                    "marginal {c} outside [0, 1]"
                )));
            }
            Ok(2.0 * c.sqrt().asin())
        })
        .collect()
}

/// Runs the outer loop against `hamiltonian`; see [`run_mgi_with_table`].
pub fn run_mgi<R: Rng + ?Sized>(
    config: &MgiConfig,
    hamiltonian: &IsingHamiltonian,
    optima: &[usize],
    rng: &mut R,
) -> Result<MgiTrace> {
    let table = hamiltonian.energy_table()?;
    run_mgi_with_table(config, &table, optima, rng)
}

/// Runs `config.iterations` outer iterations.
///
/// The first iteration always starts from the uniform superposition; every
/// later one starts from the product state defined by the previous
/// iteration's filtered marginals. Energies and success probabilities in
/// the trace are exact state-vector values, not shot estimates.
pub fn run_mgi_with_table<R: Rng + ?Sized>(
    config: &MgiConfig,
    table: &EnergyTable,
    optima: &[usize],
    rng: &mut R,
) -> Result<MgiTrace> {
    config.validate()?;
    let n_qubits = table.n_qubits();
    let total = config.iterations;

    let mut state = StateVector::uniform(n_qubits)?;
    let mut records = Vec::with_capacity(total);
    for r in 1..=total {
        let n_used = config.n_schedule.n_at(r, total);
        let dt_used = config.dt_schedule.dt_at(r, total);
        let params = FalqonParams { dt: dt_used, ..config.falqon };

        let trace = run_falqon_with_table(table, state, &params)?;
        let counts = trace.final_state.sample(config.shots, rng)?;
        let filtered = top_n_filter(&counts, n_used, table)?;
        let mut c = marginals(&filtered, n_qubits);
        if config.clamp_epsilon > 0.0 {
            clamp_marginals(&mut c, config.clamp_epsilon);
        }
        let angles = angles_from_marginals(&c)?;

        records.push(MgiIteration {
            iteration: r,
            n_used,
            dt_used,
            angles: angles.clone(),
            marginals: c,
            final_energy: trace.final_energy(),
            success_probability: trace.final_state.success_probability(optima),
        });

        state = if r < total { StateVector::product(&angles)? } else { trace.final_state };
    }
    Ok(MgiTrace { iterations: records, final_state: state })
}

/// Kullback-Leibler divergence `sum p ln(p/q)` between two distributions
/// over the same basis, with `0 ln 0 = 0`.
///
/// Returns `+inf` when `p` has support where `q` vanishes. Inputs must be
/// normalized within 1e-9.
pub fn kl_divergence(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::InvalidArgument(format!(
            "distributions differ in length: {} vs {}",
            p.len(),
            q.len()
        )));
    }
    for (label, dist) in [("first", p), ("second", q)] {
        if dist.iter().any(|&x| x.is_nan() || x < 0.0) {
            return Err(Error::InvalidArgument(format!(
                "{label} distribution has a negative or NaN entry"
            )));
        }
        let sum: f64 = dist.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidArgument(format!(
                "{label} distribution sums to {sum}, expected 1 within 1e-9"
            )));
        }
    }
    let mut total = 0.0;
    for (&pi, &qi) in p.iter().zip(q) {
        if pi == 0.0 {
            continue;
        }
        if qi == 0.0 {
            return Ok(f64::INFINITY);
        }
        total += pi * (pi / qi).ln();
    }
    Ok(total)
}

/// Per-bit marginals of `p`: the unique product distribution minimizing
/// the KL divergence from `p` to the product family.
pub fn product_projection(p: &[f64]) -> Result<Vec<f64>> {
    if p.is_empty() || !p.len().is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "distribution length {} is not a power of two",
            p.len()
        )));
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "distribution sums to {sum}, expected 1 within 1e-9"
        )));
    }
    let n_bits = p.len().trailing_zeros() as usize;
    Ok((0..n_bits)
        .map(|q| {
            p.iter()
                .enumerate()
                .filter(|&(idx, _)| (idx >> q) & 1 == 1)
                .map(|(_, &pi)| pi)
                .sum()
        })
        .collect())
}

/// Expands per-bit marginals into the full product distribution
/// `q(x) = prod_i (c_i if x_i = 1 else 1 - c_i)`.
pub fn product_distribution(marginals: &[f64]) -> Vec<f64> {
    let len = 1usize << marginals.len();
    (0..len)
        .map(|idx| {
            marginals
                .iter()
                .enumerate()
                .map(|(q, &c)| if (idx >> q) & 1 == 1 { c } else { 1.0 - c })
                .product()
        })
        .collect()
}
