//! Dense state-vector engine: product-state preparation, the two layer
//! unitaries (diagonal cost phase and uniform transverse-field rotation),
//! exact expectation values, and shot sampling.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::ising::EnergyTable;

/// Largest register the dense engine will allocate.
pub const QUBIT_LIMIT: usize = 26;

/// Tolerance on `sum |amp|^2 - 1` before a state is rejected.
///
/// Violations are reported as errors, never repaired by renormalizing;
/// silent renormalization would mask gate bugs.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Complex amplitudes over the `2^n` computational basis states.
///
/// Qubit 0 is the least-significant bit of the basis index; rendered
/// bitstrings put qubit 0 leftmost. Global phase is not tracked.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The uniform superposition: every amplitude `2^(-n/2)`.
    pub fn uniform(n_qubits: usize) -> Result<Self> {
        check_size(n_qubits)?;
        let len = 1usize << n_qubits;
        let amp = Complex64::new(1.0 / (len as f64).sqrt(), 0.0);
        Ok(Self { n_qubits, amps: vec![amp; len] })
    }

    /// Tensor product of `cos(theta/2)|0> + sin(theta/2)|1>` per qubit, so
    /// qubit `i` is measured as 1 with probability `sin^2(theta_i / 2)`.
    pub fn product(angles: &[f64]) -> Result<Self> {
        let n_qubits = angles.len();
        check_size(n_qubits)?;
        if let Some(bad) = angles.iter().find(|t| !t.is_finite()) {
            return Err(Error::InvalidArgument(format!("non-finite angle {bad}")));
        }
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for &theta in angles {
            let c = (theta / 2.0).cos();
            let s = (theta / 2.0).sin();
            let mut next = Vec::with_capacity(amps.len() * 2);
            // New qubit becomes the most-significant bit of the index.
            next.extend(amps.iter().map(|a| a * c));
            next.extend(amps.iter().map(|a| a * s));
            amps = next;
        }
        Ok(Self { n_qubits, amps })
    }

    /// Basis state `|index>`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        check_size(n_qubits)?;
        let len = 1usize << n_qubits;
        if index >= len {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); len];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits, amps })
    }

    /// Wraps raw amplitudes, requiring unit norm within [`NORM_TOLERANCE`].
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() || !amps.len().is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "amplitude count {} is not a power of two",
                amps.len()
            )));
        }
        let n_qubits = amps.len().trailing_zeros() as usize;
        check_size(n_qubits)?;
        let state = Self { n_qubits, amps };
        state.validate_norm()?;
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn validate_norm(&self) -> Result<()> {
        let norm_sqr = self.norm_sqr();
        if (norm_sqr - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::InvalidArgument(format!(
                "state norm^2 is {norm_sqr}, expected 1 within {NORM_TOLERANCE}"
            )));
        }
        Ok(())
    }

    /// Applies `exp(-i * energy[idx] * dt)` to each amplitude: the
    /// time-`dt` evolution under the diagonal cost operator.
    pub fn apply_cost_phase(&mut self, table: &EnergyTable, dt: f64) -> Result<()> {
        if table.len() != self.amps.len() {
            return Err(Error::InvalidArgument(format!(
                "diagonal has {} entries, state has {}",
                table.len(),
                self.amps.len()
            )));
        }
        for (amp, &e) in self.amps.iter_mut().zip(table.energies()) {
            *amp *= Complex64::from_polar(1.0, -e * dt);
        }
        Ok(())
    }

    /// Multiplies each amplitude by a precomputed unit phase factor.
    pub(crate) fn apply_phases(&mut self, phases: &[Complex64]) {
        debug_assert_eq!(phases.len(), self.amps.len());
        for (amp, &p) in self.amps.iter_mut().zip(phases) {
            *amp *= p;
        }
    }

    /// Applies `exp(-i * beta * dt * X)` to every qubit: the transverse-field
    /// driver step, a product of commuting single-qubit rotations.
    pub fn apply_driver(&mut self, beta: f64, dt: f64) {
        let angle = beta * dt;
        let c = angle.cos();
        let ms = Complex64::new(0.0, -angle.sin());
        for q in 0..self.n_qubits {
            let stride = 1usize << q;
            let mut base = 0;
            while base < self.amps.len() {
                for low in base..base + stride {
                    let high = low + stride;
                    let a0 = self.amps[low];
                    let a1 = self.amps[high];
                    self.amps[low] = c * a0 + ms * a1;
                    self.amps[high] = c * a1 + ms * a0;
                }
                base += stride * 2;
            }
        }
    }

    /// Exact cost expectation `sum energy[idx] * |amp[idx]|^2`.
    pub fn expect_cost(&self, table: &EnergyTable) -> Result<f64> {
        if table.len() != self.amps.len() {
            return Err(Error::InvalidArgument(format!(
                "diagonal has {} entries, state has {}",
                table.len(),
                self.amps.len()
            )));
        }
        Ok(self
            .amps
            .iter()
            .zip(table.energies())
            .map(|(a, &e)| e * a.norm_sqr())
            .sum())
    }

    /// Expectation of `i [H_d, H_p]` where `H_d = sum_q X_q` and `H_p` is
    /// the diagonal `table`, computed as `-2 Im <psi| H_d (H_p |psi>)`.
    ///
    /// Zero on any computational basis state and on uniform superpositions.
    pub fn expect_commutator(&self, table: &EnergyTable) -> Result<f64> {
        if table.len() != self.amps.len() {
            return Err(Error::InvalidArgument(format!(
                "diagonal has {} entries, state has {}",
                table.len(),
                self.amps.len()
            )));
        }
        let energies = table.energies();
        let mut cross = Complex64::new(0.0, 0.0);
        for (idx, amp) in self.amps.iter().enumerate() {
            let mut flipped = Complex64::new(0.0, 0.0);
            for q in 0..self.n_qubits {
                let other = idx ^ (1 << q);
                flipped += energies[other] * self.amps[other];
            }
            cross += amp.conj() * flipped;
        }
        Ok(-2.0 * cross.im)
    }

    /// Per-basis-state probabilities `|amp|^2`.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Probability that measuring qubit `q` yields 1.
    pub fn probability_of_one(&self, q: usize) -> f64 {
        self.amps
            .iter()
            .enumerate()
            .filter(|(idx, _)| (idx >> q) & 1 == 1)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Draws `shots` independent basis states from the `|amp|^2`
    /// distribution by inverse-CDF over the cumulative probability array.
    ///
    /// Deterministic given the generator state.
    pub fn sample<R: Rng + ?Sized>(&self, shots: u64, rng: &mut R) -> Result<BitstringCounts> {
        if shots == 0 {
            return Err(Error::InvalidArgument("shot count must be at least 1".into()));
        }
        let mut cdf = Vec::with_capacity(self.amps.len());
        let mut acc = 0.0;
        for a in &self.amps {
            acc += a.norm_sqr();
            cdf.push(acc);
        }
        let mut counts = BTreeMap::new();
        for _ in 0..shots {
            let u = rng.gen::<f64>() * acc;
            let idx = cdf.partition_point(|&c| c <= u).min(self.amps.len() - 1);
            *counts.entry(idx).or_insert(0u64) += 1;
        }
        Ok(BitstringCounts { counts, total_shots: shots })
    }

    /// Total probability mass on the given basis states.
    pub fn success_probability(&self, optima: &[usize]) -> f64 {
        optima.iter().map(|&idx| self.amps[idx].norm_sqr()).sum()
    }
}

fn check_size(n_qubits: usize) -> Result<()> {
    if n_qubits == 0 {
        return Err(Error::InvalidArgument("register needs at least one qubit".into()));
    }
    if n_qubits > QUBIT_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "dense engine limited to {QUBIT_LIMIT} qubits, got {n_qubits}"
        )));
    }
    Ok(())
}

/// Multiset of measured basis states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitstringCounts {
    counts: BTreeMap<usize, u64>,
    total_shots: u64,
}

impl BitstringCounts {
    /// Builds from explicit multiplicities; empty input is rejected.
    pub fn from_counts(counts: BTreeMap<usize, u64>) -> Result<Self> {
        if counts.is_empty() || counts.values().all(|&m| m == 0) {
            return Err(Error::InvalidArgument("empty shot record".into()));
        }
        let total_shots = counts.values().sum();
        Ok(Self { counts, total_shots })
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn total_shots(&self) -> u64 {
        self.total_shots
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn multiplicity(&self, index: usize) -> u64 {
        self.counts.get(&index).copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::graph::WeightedGraph;
    use crate::ising::IsingHamiltonian;

    fn table(energies: Vec<f64>) -> EnergyTable {
        EnergyTable::from_energies(energies).unwrap()
    }

    #[test]
    fn uniform_amplitudes() {
        let s = StateVector::uniform(1).unwrap();
        let expected = 1.0 / 2f64.sqrt();
        assert!((s.amplitudes()[0].re - expected).abs() < 1e-15);
        assert!((s.amplitudes()[1].re - expected).abs() < 1e-15);

        let s2 = StateVector::uniform(2).unwrap();
        assert!(s2.amplitudes().iter().all(|a| (a.re - 0.5).abs() < 1e-15 && a.im == 0.0));
    }

    #[test]
    fn uniform_equals_half_angle_product() {
        let u = StateVector::uniform(3).unwrap();
        let p = StateVector::product(&[std::f64::consts::FRAC_PI_2; 3]).unwrap();
        for (a, b) in u.amplitudes().iter().zip(p.amplitudes()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn product_endpoints() {
        let zero = StateVector::product(&[0.0, 0.0]).unwrap();
        assert_eq!(zero.amplitudes()[0], Complex64::new(1.0, 0.0));

        let one = StateVector::product(&[std::f64::consts::PI]).unwrap();
        assert!((one.amplitudes()[1].re - 1.0).abs() < 1e-15);
        assert!(one.amplitudes()[0].norm() < 1e-15);
    }

    #[test]
    fn product_quarter_probability() {
        // theta = 2 asin(sqrt(1/4)) = pi/3 puts probability 1/4 on |1>.
        let theta = std::f64::consts::FRAC_PI_3;
        let s = StateVector::product(&[theta, theta]).unwrap();
        assert!((s.probability_of_one(0) - 0.25).abs() < 1e-12);
        assert!((s.probability_of_one(1) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn cost_phase_identity_cases() {
        let mut s = StateVector::uniform(2).unwrap();
        let orig = s.clone();
        s.apply_cost_phase(&table(vec![1.0, -1.0, 2.0, 0.5]), 0.0).unwrap();
        assert_eq!(s, orig);
        s.apply_cost_phase(&table(vec![0.0; 4]), 1.3).unwrap();
        assert_eq!(s, orig);
    }

    #[test]
    fn cost_phase_rejects_dimension_mismatch() {
        let mut s = StateVector::uniform(2).unwrap();
        let err = s.apply_cost_phase(&table(vec![0.0, 1.0]), 0.1);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn driver_zero_is_identity() {
        let mut s = StateVector::product(&[0.3, 1.1, 2.0]).unwrap();
        let orig = s.clone();
        s.apply_driver(0.0, 0.2);
        for (a, b) in s.amplitudes().iter().zip(orig.amplitudes()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn driver_half_turn_flips_with_phase() {
        let mut s = StateVector::basis(1, 0).unwrap();
        s.apply_driver(1.0, std::f64::consts::FRAC_PI_2);
        assert!(s.amplitudes()[0].norm() < 1e-15);
        assert!((s.amplitudes()[1] - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn expectation_on_basis_and_uniform_states() {
        let t = table(vec![3.0, -1.0, -1.0, -1.0]);
        let basis = StateVector::basis(2, 3).unwrap();
        assert_eq!(basis.expect_cost(&t).unwrap(), -1.0);

        let uniform = StateVector::uniform(2).unwrap();
        assert!(uniform.expect_cost(&t).unwrap().abs() < 1e-12);
    }

    #[test]
    fn expectation_is_phase_invariant() {
        let t = table(vec![0.3, -0.4, 1.5, 0.9]);
        let s = StateVector::product(&[0.7, 1.9]).unwrap();
        let phase = Complex64::from_polar(1.0, 1.234);
        let rotated =
            StateVector::from_amplitudes(s.amplitudes().iter().map(|a| a * phase).collect())
                .unwrap();
        assert!((s.expect_cost(&t).unwrap() - rotated.expect_cost(&t).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn commutator_vanishes_on_basis_and_uniform_states() {
        let g = WeightedGraph::random_complete(4, 11).unwrap();
        let t = IsingHamiltonian::from_graph_full(&g, 1.0).energy_table().unwrap();
        for idx in [0usize, 5, 15] {
            let s = StateVector::basis(4, idx).unwrap();
            assert!(s.expect_commutator(&t).unwrap().abs() < 1e-12);
        }
        let u = StateVector::uniform(4).unwrap();
        assert!(u.expect_commutator(&t).unwrap().abs() < 1e-12);
    }

    #[test]
    fn sampling_a_basis_state_is_deterministic() {
        let s = StateVector::basis(3, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let counts = s.sample(100, &mut rng).unwrap();
        assert_eq!(counts.total_shots(), 100);
        assert_eq!(counts.multiplicity(5), 100);
        assert_eq!(counts.distinct(), 1);
    }

    #[test]
    fn sampling_same_seed_same_counts() {
        let s = StateVector::product(&[0.8, 1.7, 2.4]).unwrap();
        let a = s.sample(500, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = s.sample(500, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sampling_matches_binomial_within_three_sigma() {
        let s = StateVector::uniform(1).unwrap();
        let shots = 100_000u64;
        let counts = s.sample(shots, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        let sigma = (0.25 * shots as f64).sqrt();
        for idx in 0..2 {
            let dev = (counts.multiplicity(idx) as f64 - 50_000.0).abs();
            assert!(dev < 3.0 * sigma, "outcome {idx} off by {dev}");
        }
    }

    #[test]
    fn success_probability_cases() {
        let s = StateVector::uniform(7).unwrap();
        let all: Vec<usize> = (0..128).collect();
        assert!((s.success_probability(&all) - 1.0).abs() < 1e-12);
        assert!((s.success_probability(&[3]) - 1.0 / 128.0).abs() < 1e-15);

        let s2 = StateVector::uniform(2).unwrap();
        assert!((s2.success_probability(&[1, 2, 3]) - 0.75).abs() < 1e-12);
    }

    #[test]
    fn from_amplitudes_enforces_norm() {
        let err = StateVector::from_amplitudes(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.5, 0.0),
        ]);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn empty_counts_rejected() {
        assert!(BitstringCounts::from_counts(BTreeMap::new()).is_err());
    }
}
