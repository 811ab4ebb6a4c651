//! Spectral radius, Perron vector, walk counts and the maximum-entropy chain.
//!
//! The topological entropy of a connected graph is `H(G) = log₂ λ(G)`, the
//! growth rate of the number of walks `N_k = ⟨1, A^k 1⟩`. It equals the
//! entropy rate of the Markov chain `p*_ij = a_ij f_j / (λ f_i)`, which is the
//! largest entropy rate of any chain supported on the edges of `G`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::{sum, Sum};
use crate::randic;

/// Relative residual at which power iteration stops.
pub const TOLERANCE: f64 = 1e-13;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Dominant eigenpair of the adjacency matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub lambda: f64,
    /// Positive Perron vector normalized to unit sum.
    pub perron: Vec<f64>,
    pub iterations: usize,
    /// `‖A f − λ f‖∞` for the returned (unit-sum) `f`.
    pub residual: f64,
}

impl SpectralResult {
    /// `log₂ λ`, in bits.
    pub fn entropy_bits(&self) -> f64 {
        libm::log2(self.lambda)
    }
}

fn shifted_product(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (v, o) in out.iter_mut().enumerate() {
        let mut acc = Sum::default();
        acc.add(x[v]);
        for &w in g.neighbors(v) {
            acc.add(x[w]);
        }
        *o = acc.value();
    }
}

fn adjacency_residual(g: &Graph, lambda: f64, f: &[f64]) -> f64 {
    (0..g.n())
        .map(|v| {
            let af = sum(g.neighbors(v).iter().map(|&w| f[w]));
            libm::fabs(af - lambda * f[v])
        })
        .fold(0.0, f64::max)
}

/// Power iteration on `A + I` from the all-ones vector.
///
/// The identity shift makes the iteration matrix primitive on any connected
/// graph (bipartite ones included); `λ(A) = λ(A + I) − 1`.
pub fn spectral_radius(g: &Graph) -> Result<SpectralResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n == 1 {
        return Ok(SpectralResult { lambda: 0.0, perron: vec![1.0], iterations: 0, residual: 0.0 });
    }

    let mut x = vec![1.0 / n as f64; n];
    let mut y = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for iteration in 1..=MAX_ITERATIONS {
        shifted_product(g, &x, &mut y);
        let xy = sum(x.iter().zip(&y).map(|(a, b)| a * b));
        let xx = sum(x.iter().map(|a| a * a));
        let mu = xy / xx;
        let xmax = x.iter().copied().fold(0.0, f64::max);
        residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| libm::fabs(b - mu * a))
            .fold(0.0, f64::max)
            / (mu * xmax);
        let total = sum(y.iter().copied());
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / total;
        }
        if residual <= TOLERANCE {
            let lambda = mu - 1.0;
            let residual = adjacency_residual(g, lambda, &x);
            return Ok(SpectralResult { lambda, perron: x, iterations: iteration, residual });
        }
    }
    Err(Error::NoConvergence { iterations: MAX_ITERATIONS, residual })
}

/// `H(G) = log₂ λ(G)` in bits.
pub fn topological_entropy(g: &Graph) -> Result<f64> {
    spectral_radius(g).map(|s| s.entropy_bits())
}

/// The Schwarz constant `N_k = ⟨1, A^k 1⟩`: the number of walks of length `k`.
pub fn schwarz_constant(g: &Graph, k: u32) -> BigUint {
    let mut walks: Vec<BigUint> = vec![BigUint::from(1u32); g.n()];
    for _ in 0..k {
        walks = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(BigUint::zero(), |acc, &w| acc + &walks[w]))
            .collect();
    }
    walks.into_iter().fold(BigUint::zero(), |acc, w| acc + w)
}

fn log2_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log2(x.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top: BigUint = x >> shift;
    libm::log2(top.to_f64().unwrap_or(f64::INFINITY)) + shift as f64
}

/// `N_k^{1/k}`, which tends to `λ(G)` as `k → ∞`.
pub fn schwarz_estimate(g: &Graph, k: u32) -> f64 {
    assert!(k >= 1, "the walk-count estimate needs k >= 1");
    let n_k = schwarz_constant(g, k);
    if n_k.is_zero() {
        return 0.0;
    }
    libm::exp2(log2_big(&n_k) / k as f64)
}

/// `2 R̄_α`, the Rayleigh-quotient lower bound on `λ(G)` obtained from the
/// test vector `f(v) = d_v^α`.
pub fn rayleigh_lower_bound(g: &Graph, alpha: f64) -> f64 {
    2.0 * randic::normalized_randic(g, alpha)
}

/// A row-stochastic matrix supported on the edges of a graph, together with
/// its stationary distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarkovChain {
    rows: Vec<Vec<(usize, f64)>>,
    stationary: Vec<f64>,
}

impl MarkovChain {
    /// Wraps transition rows `(target, probability)` for `g`, validating the
    /// support and row sums and solving `πP = π` for the stationary vector.
    pub fn from_rows(g: &Graph, rows: Vec<Vec<(usize, f64)>>) -> Result<Self> {
        validate_rows(g, &rows)?;
        let stationary = solve_stationary(&rows)?;
        Ok(MarkovChain { rows, stationary })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &[(usize, f64)] {
        &self.rows[i]
    }

    /// `p_ij`, zero off the support.
    pub fn prob(&self, i: usize, j: usize) -> f64 {
        self.rows[i].iter().find(|(t, _)| *t == j).map_or(0.0, |(_, p)| *p)
    }

    pub fn stationary(&self) -> &[f64] {
        &self.stationary
    }

    /// `‖πP − π‖∞`.
    pub fn stationary_residual(&self) -> f64 {
        let mut next = vec![Sum::default(); self.n()];
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, p) in row {
                next[j].add(self.stationary[i] * p);
            }
        }
        next.iter()
            .zip(&self.stationary)
            .map(|(a, b)| libm::fabs(a.value() - b))
            .fold(0.0, f64::max)
    }

    /// Largest `|Σ_j p_ij − 1|` over the rows.
    pub fn row_sum_error(&self) -> f64 {
        self.rows
            .iter()
            .map(|row| libm::fabs(sum(row.iter().map(|e| e.1)) - 1.0))
            .fold(0.0, f64::max)
    }
}

fn validate_rows(g: &Graph, rows: &[Vec<(usize, f64)>]) -> Result<()> {
    if rows.len() != g.n() {
        return Err(Error::InvalidArgument(alloc::format!(
            "{} transition rows for {} vertices",
            rows.len(),
            g.n()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        for &(j, p) in row {
            if !(p >= 0.0) {
                return Err(Error::InvalidArgument(alloc::format!("p[{i}][{j}] = {p} is negative")));
            }
            if p > 0.0 && !g.has_edge(i, j) {
                return Err(Error::InvalidArgument(alloc::format!("p[{i}][{j}] > 0 off the edge set")));
            }
        }
        let s = sum(row.iter().map(|e| e.1));
        if libm::fabs(s - 1.0) > 1e-12 {
            return Err(Error::InvalidArgument(alloc::format!("row {i} sums to {s}")));
        }
    }
    Ok(())
}

/// Solves `π(P − I) = 0`, `Σπ = 1` by Gaussian elimination with partial
/// pivoting. Dense, so only meant for small chains.
pub fn solve_stationary(rows: &[Vec<(usize, f64)>]) -> Result<Vec<f64>> {
    let n = rows.len();
    // Column-major system (Pᵀ − I) π = 0 with the last equation replaced by Σπ = 1.
    let mut a = vec![vec![0.0; n + 1]; n];
    for (i, row) in rows.iter().enumerate() {
        for &(j, p) in row {
            a[j][i] += p;
        }
        a[i][i] -= 1.0;
    }
    for col in 0..n {
        a[n - 1][col] = 1.0;
    }
    a[n - 1][n] = 1.0;

    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r, &s| libm::fabs(a[r][col]).total_cmp(&libm::fabs(a[s][col])))
            .expect("non-empty range");
        if libm::fabs(a[pivot][col]) < 1e-300 {
            return Err(Error::Undefined("stationary distribution is not unique"));
        }
        a.swap(col, pivot);
        for r in 0..n {
            if r != col && a[r][col] != 0.0 {
                let factor = a[r][col] / a[col][col];
                for c in col..=n {
                    a[r][c] -= factor * a[col][c];
                }
            }
        }
    }
    Ok((0..n).map(|i| a[i][n] / a[i][i]).collect())
}

/// The maximum-entropy chain `p*_ij = a_ij f_j / (λ f_i)`.
///
/// Each row is renormalized by its computed sum, which differs from one only
/// by the eigen-residual. The stationary distribution is the closed form
/// `π_i = f_i² / Σ_j f_j²` (the chain is reversible with respect to `f²`).
pub fn max_entropy_chain(g: &Graph) -> Result<MarkovChain> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let spectral = spectral_radius(g)?;
    Ok(chain_from_perron(g, &spectral))
}

/// Same as [`max_entropy_chain`] but reusing an already computed eigenpair.
pub fn chain_from_perron(g: &Graph, spectral: &SpectralResult) -> MarkovChain {
    let f = &spectral.perron;
    let rows = (0..g.n())
        .map(|i| {
            let raw: Vec<(usize, f64)> = g
                .neighbors(i)
                .iter()
                .map(|&j| (j, f[j] / (spectral.lambda * f[i])))
                .collect();
            let total = sum(raw.iter().map(|e| e.1));
            raw.into_iter().map(|(j, p)| (j, p / total)).collect()
        })
        .collect();
    let norm = sum(f.iter().map(|x| x * x));
    let stationary = f.iter().map(|x| x * x / norm).collect();
    MarkovChain { rows, stationary }
}

/// Entropy rate `h(P) = −Σ_i π_i Σ_j p_ij log₂ p_ij` in bits (0·log 0 = 0).
pub fn dynamical_entropy(chain: &MarkovChain) -> f64 {
    let mut acc = Sum::default();
    for (pi, row) in chain.stationary.iter().zip(&chain.rows) {
        let mut row_entropy = Sum::default();
        for &(_, p) in row {
            if p > 0.0 {
                row_entropy.add(-p * libm::log2(p));
            }
        }
        acc.add(pi * row_entropy.value());
    }
    acc.value()
}
