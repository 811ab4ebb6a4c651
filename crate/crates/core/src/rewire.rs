//! Degree-preserving edge switches.
//!
//! A switch `(x, y, a, b)` replaces the edges `xy` and `ab` by `xa` and `yb`.
//! Every degree is unchanged, so only the four affected edge terms of `R_α`
//! move:
//!
//! ```text
//! ΔR_α = (d_b^α − d_x^α)(d_y^α − d_a^α)
//! ```

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::{degree_pow, Sum};
use crate::randic::randic_index;

/// Default number of hill-climb rounds.
pub const DEFAULT_BUDGET: usize = 10_000;

/// Replace `xy`, `ab` by `xa`, `yb`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Switch {
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub b: usize,
}

impl Switch {
    pub fn new(x: usize, y: usize, a: usize, b: usize) -> Self {
        Switch { x, y, a, b }
    }

    /// Checks distinctness, `xy, ab ∈ E` and `xa, yb ∉ E`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let Switch { x, y, a, b } = *self;
        let n = g.n();
        if x >= n || y >= n || a >= n || b >= n {
            return Err(Error::InvalidSwitch("vertex out of range"));
        }
        if x == y || x == a || x == b || y == a || y == b || a == b {
            return Err(Error::InvalidSwitch("vertices not distinct"));
        }
        if !g.has_edge(x, y) {
            return Err(Error::InvalidSwitch("xy is not an edge"));
        }
        if !g.has_edge(a, b) {
            return Err(Error::InvalidSwitch("ab is not an edge"));
        }
        if g.has_edge(x, a) {
            return Err(Error::InvalidSwitch("xa is already an edge"));
        }
        if g.has_edge(y, b) {
            return Err(Error::InvalidSwitch("yb is already an edge"));
        }
        Ok(())
    }
}

/// Closed-form change of `R_α` under a valid switch.
pub fn delta_randic(g: &Graph, s: &Switch, alpha: f64) -> Result<f64> {
    s.validate(g)?;
    Ok(delta_unchecked(g, s, alpha))
}

fn delta_unchecked(g: &Graph, s: &Switch, alpha: f64) -> f64 {
    let p = |v: usize| degree_pow(g.degree(v) as u64, alpha);
    (p(s.b) - p(s.x)) * (p(s.y) - p(s.a))
}

/// Applies a valid switch. With `require_connected`, a switch that
/// disconnects the graph is rejected.
pub fn apply_switch(g: &Graph, s: &Switch, require_connected: bool) -> Result<Graph> {
    s.validate(g)?;
    let mut h = g.clone();
    h.remove_edge(s.x, s.y);
    h.remove_edge(s.a, s.b);
    h.add_edge(s.x, s.a)?;
    h.add_edge(s.y, s.b)?;
    if require_connected && !h.is_connected() {
        return Err(Error::DisconnectingSwitch);
    }
    Ok(h)
}

/// Every valid switch of `g`, two per pair of disjoint edges, in
/// lexicographic order of the tuple.
pub fn valid_switches(g: &Graph) -> Vec<Switch> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        for &(p, q) in &edges[i + 1..] {
            for s in [Switch::new(u, v, p, q), Switch::new(u, v, q, p)] {
                if s.validate(g).is_ok() {
                    out.push(s);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// One accepted hill-climb step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: usize,
    pub switch: Switch,
    pub dx: usize,
    pub dy: usize,
    pub da: usize,
    pub db: usize,
    pub delta_r: f64,
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trace {
    pub alpha: f64,
    pub initial_r: f64,
    pub steps: Vec<TraceStep>,
    /// True when the climb stopped on the round budget rather than at a
    /// local optimum.
    pub budget_exhausted: bool,
}

impl Trace {
    pub fn final_r(&self) -> f64 {
        self.steps.last().map_or(self.initial_r, |s| s.r)
    }
}

/// Steepest-ascent hill climb on `R_α` over connectivity-preserving switches.
///
/// Each round evaluates every valid switch, orders those with
/// `ΔR_α > 0` by decreasing `ΔR_α` and then by switch tuple, and applies the
/// first one that keeps the graph connected. Increments below `1e-12 · R_α`
/// are treated as zero so rounding noise cannot drive the climb. The result is
/// a local optimum, i.e. a lower bound on the maximum over the degree class.
///
/// `seed` is reserved for randomized restarts; the climb itself is
/// deterministic.
pub fn maximize_randic(g: &Graph, alpha: f64, budget: usize, seed: u64) -> Result<(Graph, Trace)> {
    let _ = seed;
    if !(alpha > 0.0) {
        return Err(Error::InvalidArgument(alloc::format!("alpha must be positive, got {alpha}")));
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut current = g.clone();
    let mut r = randic_index(&current, alpha);
    let mut trace = Trace { alpha, initial_r: r, steps: Vec::new(), budget_exhausted: false };
    for round in 0..budget {
        let threshold = 1e-12 * r.abs().max(1.0);
        let mut improving: Vec<(f64, Switch)> = valid_switches(&current)
            .into_iter()
            .map(|s| (delta_unchecked(&current, &s, alpha), s))
            .filter(|&(d, _)| d > threshold)
            .collect();
        improving.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        let accepted = improving
            .into_iter()
            .find_map(|(d, s)| apply_switch(&current, &s, true).ok().map(|h| (d, s, h)));
        let Some((delta, s, next)) = accepted else {
            return Ok((current, trace));
        };
        let deg = |v: usize| current.degree(v);
        let (dx, dy, da, db) = (deg(s.x), deg(s.y), deg(s.a), deg(s.b));
        current = next;
        r = randic_index(&current, alpha);
        trace.steps.push(TraceStep { step: round + 1, switch: s, dx, dy, da, db, delta_r: delta, r });
    }
    trace.budget_exhausted = true;
    Ok((current, trace))
}

/// Newman's degree assortativity: the Pearson correlation of the degrees at
/// the two ends of an edge, each edge counted in both orientations.
pub fn assortativity_r(g: &Graph) -> Result<f64> {
    if g.m() < 2 {
        return Err(Error::Undefined("assortativity needs at least two edges"));
    }
    let count = 2.0 * g.m() as f64;
    let mut sx = Sum::default();
    let mut sxx = Sum::default();
    let mut sxy = Sum::default();
    for (u, v) in g.edges() {
        let (du, dv) = (g.degree(u) as f64, g.degree(v) as f64);
        sx.add(du + dv);
        sxx.add(du * du + dv * dv);
        sxy.add(2.0 * du * dv);
    }
    let mean = sx.value() / count;
    let var = sxx.value() / count - mean * mean;
    if var <= 1e-12 * mean * mean {
        return Err(Error::Undefined("all edge endpoints have the same degree"));
    }
    Ok((sxy.value() / count - mean * mean) / var)
}
