//! Seeded Erdős–Rényi graphs.
//!
//! The generator is xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`). Pairs `(i, j)`, `i < j`, are visited
//! in lexicographic order and each is kept when a uniform draw in `[0, 1)`
//! falls below `p`, so a seed fully determines the edge set.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Retries (with seed + 1 each time) before giving up on connectivity.
pub const MAX_RETRIES: u32 = 100;

/// A connected sample together with the seed that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErSample {
    pub graph: Graph,
    pub seed: u64,
}

/// One `G(n, p)` draw, connected or not.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(alloc::format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// A connected `G(n, p)` sample. Disconnected draws are rejected and the seed
/// incremented, up to [`MAX_RETRIES`] times.
pub fn generate_er(n: usize, p: f64, seed: u64) -> Result<ErSample> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    for attempt in 0..=MAX_RETRIES {
        let s = seed.wrapping_add(attempt as u64);
        let graph = gnp(n, p, s)?;
        if graph.is_connected() {
            return Ok(ErSample { graph, seed: s });
        }
    }
    Err(Error::RetriesExhausted { seed, retries: MAX_RETRIES })
}
