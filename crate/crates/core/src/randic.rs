//! Randić indices, the normalized Randić function and their entropies.
//!
//! For a real `α`:
//!
//! ```text
//! R_α   = Σ_{uv∈E} (d_u d_v)^α
//! R̄_α   = R_α / Σ_{v∈V} d_v^{2α}           (≤ λ/2 for every α)
//! p_E^α(uv) ∝ (d_u d_v)^α,  p_V^α(v) ∝ d_v^{2α}
//! ∂/∂α log R̄_α = (log R̄_α + H_V^α − H_E^α) / α
//! ```
//!
//! so at the maximizer `α*` of `R̄_α`, `log R̄_{α*} = H_E^{α*} − H_V^{α*}`.
//! Logarithms are base 2. All degrees must be at least 1.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::{degree_pow, shannon_bits, sum, Sum};

/// Default sweep interval and grid step.
pub const DEFAULT_LO: f64 = -2.0;
pub const DEFAULT_HI: f64 = 4.0;
pub const DEFAULT_STEP: f64 = 0.01;
/// Default golden-section tolerance on `α*`.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Below this distance from 1 the Rényi/Tsallis formulas switch to the Shannon limit.
pub const LIMIT_BAND: f64 = 1e-8;

fn edge_weights(g: &Graph, alpha: f64) -> Vec<f64> {
    g.edges()
        .map(|(u, v)| degree_pow((g.degree(u) * g.degree(v)) as u64, alpha))
        .collect()
}

fn vertex_weights(g: &Graph, alpha: f64) -> Vec<f64> {
    (0..g.n())
        .map(|v| {
            let d = g.degree(v) as u64;
            degree_pow(d * d, alpha)
        })
        .collect()
}

/// `R_α(G) = Σ_{uv∈E} (d_u d_v)^α`.
pub fn randic_index(g: &Graph, alpha: f64) -> f64 {
    sum(edge_weights(g, alpha))
}

/// `Σ_v d_v^{2α}`, the denominator of the normalized index.
pub fn vertex_power_sum(g: &Graph, alpha: f64) -> f64 {
    sum(vertex_weights(g, alpha))
}

/// `R̄_α = R_α / Σ_v d_v^{2α}`.
pub fn normalized_randic(g: &Graph, alpha: f64) -> f64 {
    randic_index(g, alpha) / vertex_power_sum(g, alpha)
}

/// The degree-product probability measure on the edges, in `Graph::edges` order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeMeasure {
    pub alpha: f64,
    pub edges: Vec<(usize, usize)>,
    pub probs: Vec<f64>,
}

/// The squared-degree probability measure on the vertices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexMeasure {
    pub alpha: f64,
    pub probs: Vec<f64>,
}

fn normalize(weights: Vec<f64>) -> Vec<f64> {
    let total = sum(weights.iter().copied());
    weights.into_iter().map(|w| w / total).collect()
}

pub fn edge_measure(g: &Graph, alpha: f64) -> EdgeMeasure {
    EdgeMeasure { alpha, edges: g.edges().collect(), probs: normalize(edge_weights(g, alpha)) }
}

pub fn vertex_measure(g: &Graph, alpha: f64) -> VertexMeasure {
    VertexMeasure { alpha, probs: normalize(vertex_weights(g, alpha)) }
}

/// `(H_E^α, H_V^α)`: Shannon entropies (bits) of the edge and vertex measures.
pub fn edge_vertex_entropies(g: &Graph, alpha: f64) -> (f64, f64) {
    (shannon_bits(&edge_weights(g, alpha)), shannon_bits(&vertex_weights(g, alpha)))
}

/// Rényi entropy of order `alpha` (bits) of the edge measure `p_E ∝ d_u d_v`:
/// `log₂(R_α / R_1^α) / (1 − α)`. Within [`LIMIT_BAND`] of 1 this returns the
/// Shannon entropy of `p_E`.
pub fn renyi_edge_entropy(g: &Graph, alpha: f64) -> f64 {
    if libm::fabs(alpha - 1.0) < LIMIT_BAND {
        return shannon_bits(&edge_weights(g, 1.0));
    }
    let log_r_alpha = libm::log2(randic_index(g, alpha));
    let log_r_one = libm::log2(randic_index(g, 1.0));
    (log_r_alpha - alpha * log_r_one) / (1.0 - alpha)
}

/// Tsallis `q`-entropy of the edge measure `p_E ∝ d_u d_v`:
/// `(1 − R_q / R_1^q) / (q − 1)`, dimensionless.
///
/// Within [`LIMIT_BAND`] of `q = 1` the value is the Shannon entropy in
/// **nats**, which is the actual limit of the formula; divide by `ln 2` for bits.
pub fn tsallis_edge_entropy(g: &Graph, q: f64) -> f64 {
    if libm::fabs(q - 1.0) < LIMIT_BAND {
        return shannon_bits(&edge_weights(g, 1.0)) * core::f64::consts::LN_2;
    }
    let ratio = libm::exp2(libm::log2(randic_index(g, q)) - q * libm::log2(randic_index(g, 1.0)));
    (1.0 - ratio) / (q - 1.0)
}

/// Closed-form `∂/∂α log₂ R̄_α = (log₂ R̄_α + H_V^α − H_E^α) / α`.
pub fn log_randic_derivative(g: &Graph, alpha: f64) -> Result<f64> {
    if alpha == 0.0 {
        return Err(Error::InvalidArgument("the derivative identity is undefined at alpha = 0".into()));
    }
    let (h_e, h_v) = edge_vertex_entropies(g, alpha);
    Ok((libm::log2(normalized_randic(g, alpha)) + h_v - h_e) / alpha)
}

/// All profile quantities at one `α`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaRecord {
    pub alpha: f64,
    pub r: f64,
    pub rbar: f64,
    pub log_rbar: f64,
    pub h_e: f64,
    pub h_v: f64,
    pub renyi: f64,
    pub tsallis: f64,
}

impl AlphaRecord {
    /// `log₂ R̄_α − (H_E^α − H_V^α)`; zero at `α = 0` and at `α*`.
    pub fn gap(&self) -> f64 {
        self.log_rbar - (self.h_e - self.h_v)
    }
}

/// Evaluates every profile quantity at `alpha`.
pub fn profile_point(g: &Graph, alpha: f64) -> AlphaRecord {
    let ew = edge_weights(g, alpha);
    let vw = vertex_weights(g, alpha);
    let r = sum(ew.iter().copied());
    let rbar = r / sum(vw.iter().copied());
    AlphaRecord {
        alpha,
        r,
        rbar,
        log_rbar: libm::log2(rbar),
        h_e: shannon_bits(&ew),
        h_v: shannon_bits(&vw),
        renyi: renyi_edge_entropy(g, alpha),
        tsallis: tsallis_edge_entropy(g, alpha),
    }
}

/// The maximizer of `R̄_α` located by [`find_alpha_star`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaStar {
    pub alpha: f64,
    pub rbar: f64,
    /// `R̄_α` is constant on the grid (regular graphs); `alpha` is then `lo`.
    pub flat: bool,
    /// Every grid-local maximum, in increasing `α`.
    pub local_maxima: Vec<f64>,
}

/// Grid `lo, lo + step, …, ≤ hi`, snapped to 12 decimals so that grid points
/// such as `α = 0` come out exact.
pub fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    assert!(step > 0.0 && lo <= hi, "grid needs lo <= hi and step > 0");
    let count = libm::floor((hi - lo) / step + 1e-9) as usize + 1;
    (0..count)
        .map(|i| libm::round((lo + i as f64 * step) * 1e12) / 1e12)
        .collect()
}

fn is_flat(values: &[f64]) -> bool {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    max - min <= 1e-12 * libm::fabs(max)
}

/// Locates the maximizer of `R̄_α` on `[lo, hi]`: a scan at [`DEFAULT_STEP`]
/// followed by golden-section refinement between the neighbors of the best
/// grid point, down to an interval of width `tol`.
pub fn find_alpha_star(g: &Graph, lo: f64, hi: f64, tol: f64) -> Result<AlphaStar> {
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::InvalidArgument("alpha search needs lo < hi and tol > 0".into()));
    }
    let alphas = grid(lo, hi, DEFAULT_STEP);
    let values: Vec<f64> = alphas.iter().map(|&a| normalized_randic(g, a)).collect();
    star_from_grid(g, &alphas, &values, tol)
}

fn star_from_grid(g: &Graph, alphas: &[f64], values: &[f64], tol: f64) -> Result<AlphaStar> {
    if is_flat(values) {
        return Ok(AlphaStar { alpha: alphas[0], rbar: values[0], flat: true, local_maxima: Vec::new() });
    }
    let best = (0..values.len())
        .max_by(|&i, &j| values[i].total_cmp(&values[j]).then(j.cmp(&i)))
        .expect("grid is non-empty");
    if best == 0 || best + 1 == values.len() {
        return Err(Error::BoundaryMaximum { alpha: alphas[best] });
    }
    let local_maxima = (1..values.len() - 1)
        .filter(|&i| values[i] >= values[i - 1] && values[i] > values[i + 1])
        .map(|i| alphas[i])
        .collect();
    let alpha = golden_section_max(|a| normalized_randic(g, a), alphas[best - 1], alphas[best + 1], tol);
    Ok(AlphaStar { alpha, rbar: normalized_randic(g, alpha), flat: false, local_maxima })
}

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`.
pub(crate) fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Tabulated profile over a grid plus the located `α*`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaProfile {
    pub records: Vec<AlphaRecord>,
    /// `None` when the maximum sits on the boundary of the swept interval.
    pub star: Option<AlphaStar>,
}

impl AlphaProfile {
    /// Assembles a profile from records already evaluated on a grid (e.g. in
    /// parallel), locating `α*` from them.
    pub fn from_records(g: &Graph, records: Vec<AlphaRecord>) -> Self {
        let alphas: Vec<f64> = records.iter().map(|r| r.alpha).collect();
        let values: Vec<f64> = records.iter().map(|r| r.rbar).collect();
        let star = star_from_grid(g, &alphas, &values, DEFAULT_TOL).ok();
        AlphaProfile { records, star }
    }

    /// Grid locations where `log₂ R̄_α` and `H_E^α − H_V^α` cross.
    ///
    /// A grid point whose gap is within `zero_tol` of zero counts as a crossing
    /// (runs of such points count once); otherwise a crossing is a strict sign
    /// change between consecutive nonzero points, reported at the point of
    /// smaller `|gap|`.
    pub fn crossings(&self, zero_tol: f64) -> Vec<f64> {
        let mut out = Vec::new();
        let mut prev: Option<(f64, f64)> = None;
        let mut in_zero_run = false;
        for rec in &self.records {
            let gap = rec.gap();
            if libm::fabs(gap) <= zero_tol {
                if !in_zero_run {
                    out.push(rec.alpha);
                }
                in_zero_run = true;
                prev = None;
                continue;
            }
            if let Some((pa, pg)) = prev {
                if (pg < 0.0) != (gap < 0.0) {
                    out.push(if libm::fabs(pg) < libm::fabs(gap) { pa } else { rec.alpha });
                }
            }
            in_zero_run = false;
            prev = Some((rec.alpha, gap));
        }
        out
    }
}

/// Evaluates the profile on `grid(lo, hi, step)` and locates `α*` (refined
/// by golden section between the neighbors of the best grid point).
pub fn alpha_sweep(g: &Graph, lo: f64, hi: f64, step: f64) -> AlphaProfile {
    let records = grid(lo, hi, step).into_iter().map(|a| profile_point(g, a)).collect();
    AlphaProfile::from_records(g, records)
}

/// Mean of `log₂(d_u d_v)` under `p_E^α` minus the mean of `log₂ d_v²` under
/// `p_V^α`; algebraically equal to [`log_randic_derivative`] but without the
/// division by `α`, so it is also defined at `α = 0`.
pub fn log_randic_slope(g: &Graph, alpha: f64) -> f64 {
    let mut e_num = Sum::default();
    let mut e_den = Sum::default();
    for (u, v) in g.edges() {
        let x = (g.degree(u) * g.degree(v)) as u64;
        let w = degree_pow(x, alpha);
        e_num.add(w * libm::log2(x as f64));
        e_den.add(w);
    }
    let mut v_num = Sum::default();
    let mut v_den = Sum::default();
    for v in 0..g.n() {
        let d = g.degree(v) as u64;
        let w = degree_pow(d * d, alpha);
        v_num.add(w * libm::log2((d * d) as f64));
        v_den.add(w);
    }
    e_num.value() / e_den.value() - v_num.value() / v_den.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        libm::fabs(a - b) <= tol
    }

    #[test]
    fn cycle_indices() {
        for n in 3..9 {
            let c = Graph::cycle(n);
            for alpha in [-1.0, 0.0, 0.3, 0.5, 1.0, 2.0] {
                let expected = n as f64 * libm::pow(4.0, alpha);
                assert!(close(randic_index(&c, alpha), expected, 1e-12 * expected));
                assert!(close(normalized_randic(&c, alpha), 1.0, 1e-14));
            }
        }
    }

    #[test]
    fn integer_alpha_is_exact() {
        let g = Graph::star(4);
        assert_eq!(randic_index(&g, 1.0), 16.0);
        assert_eq!(vertex_power_sum(&g, 1.0), 20.0);
        assert_eq!(normalized_randic(&g, 1.0), 0.8);
        assert_eq!(randic_index(&g, 0.0), 4.0);
    }

    #[test]
    fn measures_on_path_three() {
        let p3 = Graph::path(3);
        let e = edge_measure(&p3, 1.0);
        assert_eq!(e.probs, [0.5, 0.5]);
        let v = vertex_measure(&p3, 1.0);
        for (a, b) in v.probs.iter().zip([1.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0]) {
            assert!(close(*a, b, 1e-15));
        }
        let uniform = vertex_measure(&p3, 0.0);
        assert!(uniform.probs.iter().all(|&p| close(p, 1.0 / 3.0, 1e-15)));
    }

    #[test]
    fn entropies_at_zero_are_log_counts() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let (h_e, h_v) = edge_vertex_entropies(&g, 0.0);
        assert!(close(h_e, libm::log2(5.0), 1e-14));
        assert!(close(h_v, libm::log2(5.0), 1e-14));
        let rec = profile_point(&g, 0.0);
        assert!(close(rec.log_rbar, libm::log2(g.degree_stats().avg() / 2.0), 1e-14));
        assert!(close(rec.gap(), 0.0, 1e-14));
    }

    #[test]
    fn renyi_and_tsallis_on_path_three() {
        let p3 = Graph::path(3);
        assert!(close(renyi_edge_entropy(&p3, 2.0), 1.0, 1e-14));
        assert!(close(tsallis_edge_entropy(&p3, 2.0), 0.5, 1e-14));
        assert!(close(renyi_edge_entropy(&p3, 0.0), 1.0, 1e-14));
        assert!(close(tsallis_edge_entropy(&p3, 0.0), 1.0, 1e-14));
    }

    #[test]
    fn renyi_and_tsallis_limits() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (1, 2)]).unwrap();
        let shannon = shannon_bits(&edge_weights(&g, 1.0));
        for a in [1.0 - 1e-6, 1.0 + 1e-6] {
            assert!(close(renyi_edge_entropy(&g, a), shannon, 1e-4));
            assert!(close(tsallis_edge_entropy(&g, a), shannon * core::f64::consts::LN_2, 1e-4));
        }
        assert_eq!(renyi_edge_entropy(&g, 1.0), shannon);
        // Uniform measure over m edges: Tsallis-2 is 1 − 1/m.
        let c = Graph::cycle(7);
        assert!(close(tsallis_edge_entropy(&c, 2.0), 1.0 - 1.0 / 7.0, 1e-14));
        assert!(close(tsallis_edge_entropy(&c, 0.0), 6.0, 1e-12));
        assert!(close(renyi_edge_entropy(&c, 3.0), libm::log2(7.0), 1e-12));
    }

    #[test]
    fn derivative_vanishes_on_regular_graphs() {
        let k5 = Graph::complete(5);
        for alpha in [-1.0, 0.5, 2.0] {
            assert!(close(log_randic_derivative(&k5, alpha).unwrap(), 0.0, 1e-12));
        }
        assert!(log_randic_derivative(&k5, 0.0).is_err());
    }

    #[test]
    fn slope_matches_closed_form() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (1, 2)]).unwrap();
        for alpha in [-1.2, 0.3, 1.7] {
            let closed = log_randic_derivative(&g, alpha).unwrap();
            assert!(close(closed, log_randic_slope(&g, alpha), 1e-12));
        }
    }

    #[test]
    fn flat_profile_on_regular_graph() {
        let star = find_alpha_star(&Graph::cycle(6), DEFAULT_LO, DEFAULT_HI, DEFAULT_TOL).unwrap();
        assert!(star.flat);
        assert_eq!(star.alpha, DEFAULT_LO);
        assert!(close(star.rbar, 1.0, 1e-14));
    }

    #[test]
    fn star_graph_maximum_on_boundary() {
        // K_{1,k}: R̄_α = k^{1+α} / (k^{2α} + k), maximal at α = 1/2 with value √k / 2.
        let s = find_alpha_star(&Graph::star(4), DEFAULT_LO, DEFAULT_HI, DEFAULT_TOL).unwrap();
        assert!(close(s.alpha, 0.5, 1e-6), "{}", s.alpha);
        assert!(close(s.rbar, 1.0, 1e-12));
        let narrow = find_alpha_star(&Graph::star(4), 0.6, 2.0, DEFAULT_TOL);
        assert!(matches!(narrow, Err(Error::BoundaryMaximum { .. })));
    }

    #[test]
    fn grid_hits_zero_exactly() {
        let g = grid(-2.0, 4.0, 0.01);
        assert_eq!(g.len(), 601);
        assert_eq!(g[200], 0.0);
        assert_eq!(g[0], -2.0);
        assert_eq!(*g.last().unwrap(), 4.0);
    }

    #[test]
    fn golden_section_finds_parabola_peak() {
        let x = golden_section_max(|x| -(x - 0.37) * (x - 0.37), 0.0, 1.0, 1e-10);
        assert!(close(x, 0.37, 1e-9));
    }
}
