//! Weighted MaxCut instances: generation, edge-list I/O, cut evaluation,
//! the QUBO form, and an exhaustive optimum oracle.
//!
//! A [`WeightedGraph`] stores each undirected edge once as `(i, j, w)` with
//! `i < j` and `w >= 0`. A cut is described by an [`Assignment`] of one bit
//! per vertex; bit `x_i = 1` places vertex `i` in the selected subset.

use std::fmt;
use std::fs;
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`WeightedGraph::brute_force_maxcut`].
pub const BRUTE_FORCE_LIMIT: usize = 30;

/// Relative tolerance for grouping tied optima.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// An undirected graph with nonnegative edge weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n_vertices: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl WeightedGraph {
    /// Builds a graph from an edge list, normalizing each pair to `i < j`.
    ///
    /// Rejects self-loops, duplicate pairs, out-of-range indices, and
    /// negative or non-finite weights.
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::InvalidInstance("graph needs at least one vertex".into()));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b, w) in edges {
            if a == b {
                return Err(Error::InvalidInstance(format!("self-loop at vertex {a}")));
            }
            if a >= n_vertices || b >= n_vertices {
                return Err(Error::InvalidInstance(format!(
                    "edge ({a},{b}) out of range for {n_vertices} vertices"
                )));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidInstance(format!(
                    "edge ({a},{b}) has invalid weight {w}"
                )));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            normalized.push((i, j, w));
        }
        normalized.sort_by_key(|&(i, j, _)| (i, j));
        if normalized.windows(2).any(|p| (p[0].0, p[0].1) == (p[1].0, p[1].1)) {
            return Err(Error::InvalidInstance("duplicate edge".into()));
        }
        Ok(Self { n_vertices, edges: normalized })
    }

    /// Complete graph on `n_vertices` vertices with weights drawn i.i.d.
    /// from `Unif(0,1)` using a generator seeded by `seed`.
    ///
    /// Identical seeds yield bit-identical graphs.
    pub fn random_complete(n_vertices: usize, seed: u64) -> Result<Self> {
        if n_vertices < 2 {
            return Err(Error::InvalidInstance(format!(
                "complete graph needs at least 2 vertices, got {n_vertices}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::with_capacity(n_vertices * (n_vertices - 1) / 2);
        for i in 0..n_vertices {
            for j in (i + 1)..n_vertices {
                edges.push((i, j, rng.gen::<f64>()));
            }
        }
        Ok(Self { n_vertices, edges })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Edges as `(i, j, w)` triples with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// Sum of all edge weights.
    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|&(_, _, w)| w).sum()
    }

    /// Total weight of edges crossing the cut described by `assignment`,
    /// evaluated as `sum w_ij (x_i + x_j - 2 x_i x_j)`.
    pub fn cut_value(&self, assignment: &Assignment) -> Result<f64> {
        if assignment.len() != self.n_vertices {
            return Err(Error::InvalidArgument(format!(
                "assignment has {} bits, graph has {} vertices",
                assignment.len(),
                self.n_vertices
            )));
        }
        let mut total = 0.0;
        for &(i, j, w) in &self.edges {
            let xi = assignment.bit(i) as u8 as f64;
            let xj = assignment.bit(j) as u8 as f64;
            total += w * (xi + xj - 2.0 * xi * xj);
        }
        Ok(total)
    }

    /// The QUBO matrix whose quadratic form reproduces [`Self::cut_value`].
    pub fn qubo_matrix(&self) -> QuboMatrix {
        let n = self.n_vertices;
        let mut data = vec![0.0; n * n];
        for &(i, j, w) in &self.edges {
            data[i * n + i] += w;
            data[j * n + j] += w;
            data[i * n + j] = -2.0 * w;
        }
        QuboMatrix { n, data }
    }

    /// Exhaustive MaxCut: the maximum cut value and every assignment
    /// attaining it within [`TIE_TOLERANCE`] (relative).
    ///
    /// The optima set is closed under global bit complement.
    pub fn brute_force_maxcut(&self) -> Result<(f64, Vec<Assignment>)> {
        let n = self.n_vertices;
        if n > BRUTE_FORCE_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "exhaustive search limited to {BRUTE_FORCE_LIMIT} vertices, got {n}"
            )));
        }
        let cut_of = |mask: u64| -> f64 {
            self.edges
                .iter()
                .map(|&(i, j, w)| w * (((mask >> i) ^ (mask >> j)) & 1) as f64)
                .sum()
        };
        let total = 1u64 << n;
        let mut best = f64::NEG_INFINITY;
        for mask in 0..total {
            let v = cut_of(mask);
            if v > best {
                best = v;
            }
        }
        let threshold = best - TIE_TOLERANCE * best.abs();
        let mut optima = Vec::new();
        for mask in 0..total {
            if cut_of(mask) >= threshold {
                optima.push(Assignment::from_index(mask, n));
            }
        }
        Ok((best, optima))
    }

    /// Serializes to the plain-text edge-list format: a `"n m"` header line
    /// followed by one `"i j w"` line per edge, weights printed with 17
    /// significant digits so parsing recovers them bit-exactly.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n_vertices, self.edges.len());
        for &(i, j, w) in &self.edges {
            out.push_str(&format!("{i} {j} {w:.16e}\n"));
        }
        out
    }

    /// Parses the edge-list format produced by [`Self::to_edge_list_string`].
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge-list file".into()))?;
        let mut parts = header.split_whitespace();
        let n_vertices: usize = parse_field(parts.next(), "vertex count")?;
        let n_edges: usize = parse_field(parts.next(), "edge count")?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!("malformed header line: {header:?}")));
        }
        let mut edges = Vec::with_capacity(n_edges);
        for line in lines {
            let mut parts = line.split_whitespace();
            let i: usize = parse_field(parts.next(), "edge endpoint")?;
            let j: usize = parse_field(parts.next(), "edge endpoint")?;
            let w: f64 = parse_field(parts.next(), "edge weight")?;
            if parts.next().is_some() {
                return Err(Error::Parse(format!("malformed edge line: {line:?}")));
            }
            edges.push((i, j, w));
        }
        if edges.len() != n_edges {
            return Err(Error::Parse(format!(
                "header promises {n_edges} edges, found {}",
                edges.len()
            )));
        }
        Self::new(n_vertices, edges).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn write_edge_list<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        fs::write(path, self.to_edge_list_string())?;
        Ok(())
    }

    pub fn read_edge_list<P: AsRef<Path>>(path: P) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::parse_edge_list(&text)
    }
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, what: &str) -> Result<T> {
    let raw = field.ok_or_else(|| Error::Parse(format!("missing {what}")))?;
    raw.parse()
        .map_err(|_| Error::Parse(format!("invalid {what}: {raw:?}")))
}

/// One bit per vertex; bit `i` set means vertex `i` is in the selected subset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    bits: Vec<bool>,
}

impl Assignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Decodes `index` as an assignment of `len` bits, vertex 0 being the
    /// least-significant bit.
    pub fn from_index(index: u64, len: usize) -> Self {
        assert!(len <= 64, "index-based assignments support up to 64 vertices");
        Self { bits: (0..len).map(|i| (index >> i) & 1 == 1).collect() }
    }

    /// Inverse of [`Self::from_index`].
    pub fn to_index(&self) -> u64 {
        assert!(self.bits.len() <= 64);
        self.bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | ((b as u64) << i))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Flips every bit (the cut it describes is unchanged).
    pub fn complement(&self) -> Self {
        Self { bits: self.bits.iter().map(|b| !b).collect() }
    }
}

impl fmt::Display for Assignment {
    /// Vertex 0 is rendered leftmost.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Upper-triangular QUBO matrix: the quadratic form `x^T Q x` over binary
/// `x` equals the cut value of the source graph.
///
/// Off-diagonal entries are stored once, above the diagonal, with value
/// `-2 w_ij`; a symmetric layout with the same entries would double-count
/// every cross term in the quadratic form.
#[derive(Debug, Clone, PartialEq)]
pub struct QuboMatrix {
    n: usize,
    data: Vec<f64>,
}

impl QuboMatrix {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Evaluates `x^T Q x` for a binary assignment.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<f64> {
        if assignment.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "assignment has {} bits, matrix dimension is {}",
                assignment.len(),
                self.n
            )));
        }
        let mut total = 0.0;
        for i in 0..self.n {
            if !assignment.bit(i) {
                continue;
            }
            for j in i..self.n {
                if assignment.bit(j) {
                    total += self.data[i * self.n + j];
                }
            }
        }
        Ok(total)
    }
}
