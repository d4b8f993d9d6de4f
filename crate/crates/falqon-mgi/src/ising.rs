//! Diagonal cost Hamiltonians for MaxCut: pairwise `Z Z` couplings plus
//! linear `Z` fields, with an optional one-qubit symmetry reduction.
//!
//! Sign convention: couplings carry `+w_ij`, so the energy of a bitstring is
//! `scale * (sum_w - 2 * cut)` and minimizing energy maximizes the cut. The
//! spin value of bit `b_i` is `z_i = 1 - 2 b_i`.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Largest register for which a full energy table is materialized.
pub const TABLE_QUBIT_LIMIT: usize = 26;

/// Relative tolerance for grouping degenerate ground states.
pub const GROUND_TOLERANCE: f64 = 1e-12;

/// Diagonal operator `scale * (sum_ij J_ij Z_i Z_j + sum_j h_j Z_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingHamiltonian {
    n_qubits: usize,
    couplings: Vec<(usize, usize, f64)>,
    fields: Vec<(usize, f64)>,
    scale: f64,
}

impl IsingHamiltonian {
    /// Builds an operator from explicit terms, normalizing coupling pairs
    /// to `i < j` and rejecting duplicates and out-of-range indices.
    pub fn new(
        n_qubits: usize,
        couplings: Vec<(usize, usize, f64)>,
        fields: Vec<(usize, f64)>,
        scale: f64,
    ) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::InvalidInstance("operator needs at least one qubit".into()));
        }
        let mut normalized = Vec::with_capacity(couplings.len());
        for (a, b, j) in couplings {
            if a == b {
                return Err(Error::InvalidInstance(format!("coupling pairs qubit {a} with itself")));
            }
            if a >= n_qubits || b >= n_qubits {
                return Err(Error::InvalidInstance(format!(
                    "coupling ({a},{b}) out of range for {n_qubits} qubits"
                )));
            }
            normalized.push(if a < b { (a, b, j) } else { (b, a, j) });
        }
        normalized.sort_by_key(|&(i, j, _)| (i, j));
        if normalized.windows(2).any(|p| (p[0].0, p[0].1) == (p[1].0, p[1].1)) {
            return Err(Error::InvalidInstance("duplicate coupling pair".into()));
        }
        for &(q, _) in &fields {
            if q >= n_qubits {
                return Err(Error::InvalidInstance(format!(
                    "field on qubit {q} out of range for {n_qubits} qubits"
                )));
            }
        }
        Ok(Self { n_qubits, couplings: normalized, fields, scale })
    }

    /// Cost operator on the full register: one qubit per vertex, coupling
    /// `+w_ij` per edge, no linear fields.
    pub fn from_graph_full(graph: &WeightedGraph, scale: f64) -> Self {
        Self {
            n_qubits: graph.n_vertices(),
            couplings: graph.edges().to_vec(),
            fields: Vec::new(),
            scale,
        }
    }

    /// Cost operator with `fixed_vertex` pinned to the 0 side of the cut,
    /// removing the global bit-flip degeneracy and one qubit.
    ///
    /// Edges incident to the fixed vertex become linear fields `+w` on the
    /// surviving endpoint; the remaining vertices are renumbered by deleting
    /// the fixed index. Ground states of the result, with a 0 bit
    /// re-inserted at `fixed_vertex`, are exactly the maximum cuts that
    /// place `fixed_vertex` in the 0 subset.
    pub fn from_graph_reduced(
        graph: &WeightedGraph,
        fixed_vertex: usize,
        scale: f64,
    ) -> Result<Self> {
        let n = graph.n_vertices();
        if fixed_vertex >= n {
            return Err(Error::InvalidArgument(format!(
                "fixed vertex {fixed_vertex} out of range for {n} vertices"
            )));
        }
        if n < 2 {
            return Err(Error::InvalidInstance(
                "reduction needs at least two vertices".into(),
            ));
        }
        let remap = |v: usize| if v < fixed_vertex { v } else { v - 1 };
        let mut couplings = Vec::new();
        let mut fields = Vec::new();
        for &(i, j, w) in graph.edges() {
            if i == fixed_vertex {
                fields.push((remap(j), w));
            } else if j == fixed_vertex {
                fields.push((remap(i), w));
            } else {
                couplings.push((remap(i), remap(j), w));
            }
        }
        fields.sort_by_key(|&(q, _)| q);
        Ok(Self { n_qubits: n - 1, couplings, fields, scale })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn couplings(&self) -> &[(usize, usize, f64)] {
        &self.couplings
    }

    pub fn fields(&self) -> &[(usize, f64)] {
        &self.fields
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Energy of one basis state, summed term by term.
    pub fn energy_of(&self, bits: usize) -> f64 {
        let z = |q: usize| 1.0 - 2.0 * ((bits >> q) & 1) as f64;
        let mut e = 0.0;
        for &(i, j, w) in &self.couplings {
            e += w * z(i) * z(j);
        }
        for &(q, h) in &self.fields {
            e += h * z(q);
        }
        self.scale * e
    }

    /// Materializes the full diagonal, indexed by basis state with qubit 0
    /// as the least-significant bit.
    pub fn energy_table(&self) -> Result<EnergyTable> {
        if self.n_qubits > TABLE_QUBIT_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "energy table limited to {TABLE_QUBIT_LIMIT} qubits, got {}",
                self.n_qubits
            )));
        }
        // Parity trick: z_i z_j = 1 - 2*parity(bits & pair_mask), likewise
        // for single-qubit terms.
        let pair_masks: Vec<(usize, f64)> = self
            .couplings
            .iter()
            .map(|&(i, j, w)| ((1usize << i) | (1usize << j), w))
            .collect();
        let field_masks: Vec<(usize, f64)> = self
            .fields
            .iter()
            .map(|&(q, h)| (1usize << q, h))
            .collect();
        let len = 1usize << self.n_qubits;
        let mut energies = vec![0.0; len];
        for (bits, slot) in energies.iter_mut().enumerate() {
            let mut e = 0.0;
            for &(mask, w) in &pair_masks {
                e += w * (1.0 - 2.0 * ((bits & mask).count_ones() & 1) as f64);
            }
            for &(mask, h) in &field_masks {
                e += h * (1.0 - 2.0 * ((bits & mask).count_ones() & 1) as f64);
            }
            *slot = self.scale * e;
        }
        Ok(EnergyTable { n_qubits: self.n_qubits, energies })
    }
}

/// The diagonal of a cost Hamiltonian over all `2^n` basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyTable {
    n_qubits: usize,
    energies: Vec<f64>,
}

impl EnergyTable {
    /// Wraps a precomputed diagonal; the length must be a power of two.
    pub fn from_energies(energies: Vec<f64>) -> Result<Self> {
        if energies.is_empty() || !energies.len().is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "diagonal length {} is not a power of two",
                energies.len()
            )));
        }
        let n_qubits = energies.len().trailing_zeros() as usize;
        Ok(Self { n_qubits, energies })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn energy(&self, bits: usize) -> f64 {
        self.energies[bits]
    }

    /// Minimum energy and every basis state within [`GROUND_TOLERANCE`]
    /// (relative) of it, in increasing index order.
    pub fn ground_states(&self) -> (f64, Vec<usize>) {
        let min = self.energies.iter().copied().fold(f64::INFINITY, f64::min);
        let threshold = min + GROUND_TOLERANCE * min.abs();
        let states = self
            .energies
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e <= threshold)
            .map(|(i, _)| i)
            .collect();
        (min, states)
    }
}

/// Re-inserts a 0 bit at `fixed_vertex`, mapping a reduced-register basis
/// state back to a full-graph assignment index.
pub fn expand_reduced_index(reduced: usize, fixed_vertex: usize) -> usize {
    let low = reduced & ((1 << fixed_vertex) - 1);
    let high = reduced >> fixed_vertex;
    low | (high << (fixed_vertex + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Assignment;

    fn unit_triangle() -> WeightedGraph {
        WeightedGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap()
    }

    #[test]
    fn full_single_edge_energies() {
        let g = WeightedGraph::new(2, vec![(0, 1, 1.0)]).unwrap();
        let h = IsingHamiltonian::from_graph_full(&g, 1.0);
        let t = h.energy_table().unwrap();
        assert_eq!(t.energies(), &[1.0, -1.0, -1.0, 1.0]);
    }

    #[test]
    fn full_empty_graph_is_zero() {
        let g = WeightedGraph::new(3, vec![]).unwrap();
        let t = IsingHamiltonian::from_graph_full(&g, 1.0).energy_table().unwrap();
        assert!(t.energies().iter().all(|&e| e == 0.0));
    }

    #[test]
    fn scale_is_linear() {
        let g = WeightedGraph::random_complete(5, 9).unwrap();
        let unit = IsingHamiltonian::from_graph_full(&g, 1.0).energy_table().unwrap();
        let quarter = IsingHamiltonian::from_graph_full(&g, 0.25).energy_table().unwrap();
        for (a, b) in unit.energies().iter().zip(quarter.energies()) {
            assert_eq!(*b, 0.25 * *a);
        }
    }

    #[test]
    fn reduced_triangle_structure() {
        let h = IsingHamiltonian::from_graph_reduced(&unit_triangle(), 0, 1.0).unwrap();
        assert_eq!(h.n_qubits(), 2);
        assert_eq!(h.couplings(), &[(0, 1, 1.0)]);
        assert_eq!(h.fields(), &[(0, 1.0), (1, 1.0)]);
        let t = h.energy_table().unwrap();
        // Hand enumeration of z0 z1 + z0 + z1 over the four spin configurations.
        assert_eq!(t.energies(), &[3.0, -1.0, -1.0, -1.0]);
        let (e_star, states) = t.ground_states();
        assert_eq!(e_star, -1.0);
        assert_eq!(states, vec![1, 2, 3]);
    }

    #[test]
    fn reduced_single_edge_is_lone_field() {
        let g = WeightedGraph::new(2, vec![(0, 1, 0.7)]).unwrap();
        let h = IsingHamiltonian::from_graph_reduced(&g, 0, 1.0).unwrap();
        assert_eq!(h.n_qubits(), 1);
        assert!(h.couplings().is_empty());
        assert_eq!(h.fields(), &[(0, 0.7)]);
        let t = h.energy_table().unwrap();
        assert_eq!(t.energies(), &[0.7, -0.7]);
        assert_eq!(t.ground_states().1, vec![1]);
    }

    #[test]
    fn reduced_star_has_only_fields() {
        let g = WeightedGraph::new(4, vec![(0, 1, 0.2), (0, 2, 0.3), (0, 3, 0.4)]).unwrap();
        let h = IsingHamiltonian::from_graph_reduced(&g, 0, 1.0).unwrap();
        assert!(h.couplings().is_empty());
        assert_eq!(h.fields(), &[(0, 0.2), (1, 0.3), (2, 0.4)]);
    }

    #[test]
    fn reduced_rejects_bad_vertex() {
        let err = IsingHamiltonian::from_graph_reduced(&unit_triangle(), 3, 1.0);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn single_field_table() {
        let h = IsingHamiltonian {
            n_qubits: 1,
            couplings: vec![],
            fields: vec![(0, 1.0)],
            scale: 1.0,
        };
        assert_eq!(h.energy_table().unwrap().energies(), &[1.0, -1.0]);
    }

    #[test]
    fn ground_states_cases() {
        let t = EnergyTable::from_energies(vec![3.0, -1.0, -1.0, -1.0]).unwrap();
        assert_eq!(t.ground_states(), (-1.0, vec![1, 2, 3]));

        let zeros = EnergyTable::from_energies(vec![0.0; 4]).unwrap();
        assert_eq!(zeros.ground_states(), (0.0, vec![0, 1, 2, 3]));

        let pair = EnergyTable::from_energies(vec![1.0, -1.0]).unwrap();
        assert_eq!(pair.ground_states(), (-1.0, vec![1]));
    }

    #[test]
    fn full_energy_equals_weight_sum_minus_twice_cut() {
        for seed in 0..4 {
            let g = WeightedGraph::random_complete(8, seed).unwrap();
            let t = IsingHamiltonian::from_graph_full(&g, 1.0).energy_table().unwrap();
            let sum_w = g.total_weight();
            for mask in 0..(1usize << 8) {
                let a = Assignment::from_index(mask as u64, 8);
                let expected = sum_w - 2.0 * g.cut_value(&a).unwrap();
                assert!((t.energy(mask) - expected).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn reduced_optima_are_full_optima_with_fixed_bit_clear() {
        for seed in 0..4 {
            let g = WeightedGraph::random_complete(8, 100 + seed).unwrap();
            let full = IsingHamiltonian::from_graph_full(&g, 1.0).energy_table().unwrap();
            let reduced = IsingHamiltonian::from_graph_reduced(&g, 0, 1.0)
                .unwrap()
                .energy_table()
                .unwrap();
            let full_optima: Vec<usize> = full
                .ground_states()
                .1
                .into_iter()
                .filter(|idx| idx & 1 == 0)
                .collect();
            let expanded: Vec<usize> = reduced
                .ground_states()
                .1
                .into_iter()
                .map(|idx| expand_reduced_index(idx, 0))
                .collect();
            assert_eq!(expanded, full_optima);
        }
    }

    #[test]
    fn table_matches_term_recomputation() {
        let g = WeightedGraph::random_complete(6, 31).unwrap();
        let h = IsingHamiltonian::from_graph_reduced(&g, 0, 0.25).unwrap();
        let t = h.energy_table().unwrap();
        for bits in [0usize, 1, 7, 19, 30, 31] {
            assert!((t.energy(bits) - h.energy_of(bits)).abs() <= 1e-12);
        }
    }

    #[test]
    fn expand_reduced_index_inserts_zero_bit() {
        assert_eq!(expand_reduced_index(0b101, 0), 0b1010);
        assert_eq!(expand_reduced_index(0b101, 1), 0b1001);
        assert_eq!(expand_reduced_index(0b101, 3), 0b0101);
    }
}
