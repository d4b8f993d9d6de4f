//! Dense linear-algebra oracles, independent of the simulator's layer maps.
//!
//! Everything here works on explicit `2^n x 2^n` matrices (row-major), so
//! it is only usable for a few qubits; that is the point: it cross-checks
//! the engine against matrix exponentials computed by scaled Taylor series.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;

use falqon_mgi::ising::{EnergyTable, IsingHamiltonian};
use falqon_mgi::qstate::StateVector;

pub type C = Complex64;

#[derive(Clone)]
pub struct DenseMatrix {
    pub dim: usize,
    pub data: Vec<C>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![C::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = C::new(1.0, 0.0);
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> C {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: C) {
        self.data[r * self.dim + c] = v;
    }

    pub fn scale(&self, s: C) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(C::new(-1.0, 0.0)))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.at(r, k);
                if a == C::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * other.at(k, c);
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[C]) -> Vec<C> {
        let n = self.dim;
        assert_eq!(v.len(), n);
        (0..n)
            .map(|r| (0..n).map(|c| self.at(r, c) * v[c]).sum())
            .collect()
    }

    fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    /// Matrix exponential by scaling-and-squaring over a Taylor series.
    pub fn expm(&self) -> Self {
        let n = self.dim;
        let norm = self.max_abs() * n as f64;
        let squarings = if norm > 0.25 { (norm / 0.25).log2().ceil() as u32 } else { 0 };
        let scaled = self.scale(C::new(1.0 / 2f64.powi(squarings as i32), 0.0));

        let mut result = DenseMatrix::identity(n);
        let mut term = DenseMatrix::identity(n);
        for j in 1..=24 {
            term = term.matmul(&scaled).scale(C::new(1.0 / j as f64, 0.0));
            result = result.add(&term);
        }
        for _ in 0..squarings {
            result = result.matmul(&result);
        }
        result
    }
}

/// `sum_q X_q` as a dense matrix.
pub fn driver_matrix(n_qubits: usize) -> DenseMatrix {
    let dim = 1 << n_qubits;
    let mut m = DenseMatrix::zeros(dim);
    for idx in 0..dim {
        for q in 0..n_qubits {
            m.set(idx, idx ^ (1 << q), C::new(1.0, 0.0));
        }
    }
    m
}

/// A diagonal energy table as a dense matrix.
pub fn diagonal_matrix(table: &EnergyTable) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(table.len());
    for (idx, &e) in table.energies().iter().enumerate() {
        m.set(idx, idx, C::new(e, 0.0));
    }
    m
}

/// The observable `i [H_d, H_p]` as a dense matrix.
pub fn commutator_matrix(hd: &DenseMatrix, hp: &DenseMatrix) -> DenseMatrix {
    hd.matmul(hp).sub(&hp.matmul(hd)).scale(C::new(0.0, 1.0))
}

pub fn expectation(m: &DenseMatrix, psi: &[C]) -> C {
    let mpsi = m.matvec(psi);
    psi.iter().zip(&mpsi).map(|(a, b)| a.conj() * b).sum()
}

/// Haar-ish random state: i.i.d. complex Gaussians, normalized.
pub fn random_state<R: Rng>(n_qubits: usize, rng: &mut R) -> StateVector {
    let len = 1usize << n_qubits;
    let mut amps: Vec<C> = (0..len)
        .map(|_| C::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
        .collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|a| *a /= norm);
    StateVector::from_amplitudes(amps).expect("normalized by construction")
}

/// Random couplings and fields in [-1, 1] on every pair and qubit.
pub fn random_hamiltonian<R: Rng>(n_qubits: usize, rng: &mut R) -> IsingHamiltonian {
    let mut couplings = Vec::new();
    for i in 0..n_qubits {
        for j in (i + 1)..n_qubits {
            couplings.push((i, j, rng.gen_range(-1.0..1.0)));
        }
    }
    let fields = (0..n_qubits).map(|q| (q, rng.gen_range(-1.0..1.0))).collect();
    IsingHamiltonian::new(n_qubits, couplings, fields, 1.0).expect("valid by construction")
}
