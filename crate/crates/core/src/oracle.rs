//! Brute-force enumerators and closed-form spectra.
//!
//! These are independent references for the extremal results and for the
//! numeric kernels; they are exponential and guarded to small `n`.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::DegreeSequence;

/// Largest `n` accepted by [`enumerate_trees`].
pub const TREE_LIMIT: usize = 12;
/// Largest `n` accepted by [`enumerate_connected_graphs`].
pub const GRAPH_LIMIT: usize = 7;

/// Every labeled tree whose vertex `i` has degree `pi[i]`, decoded from the
/// Prüfer codes in which label `i` appears `d_i − 1` times.
pub struct TreeIterator {
    n: usize,
    code: Vec<usize>,
    done: bool,
}

impl TreeIterator {
    /// `(n − 2)! / Π (d_i − 1)!`.
    pub fn count(pi: &DegreeSequence) -> u128 {
        let n = pi.len();
        if n <= 2 {
            return 1;
        }
        let mut total: u128 = (1..=(n - 2) as u128).product();
        for &d in pi.as_slice() {
            total /= (1..=d.saturating_sub(1) as u128).product::<u128>();
        }
        total
    }
}

impl Iterator for TreeIterator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let tree = if self.n == 1 {
            Graph::empty(1)
        } else {
            decode_prufer(self.n, &self.code)
        };
        self.done = !next_multiset_permutation(&mut self.code);
        Some(tree)
    }
}

pub fn enumerate_trees(pi: &DegreeSequence) -> Result<TreeIterator> {
    let n = pi.len();
    if n > TREE_LIMIT {
        return Err(Error::GuardExceeded { n, limit: TREE_LIMIT });
    }
    if !pi.is_tree_sequence() {
        return Err(Error::NotTreeSequence);
    }
    let mut code = Vec::with_capacity(n.saturating_sub(2));
    for (i, &d) in pi.as_slice().iter().enumerate() {
        for _ in 1..d {
            code.push(i);
        }
    }
    Ok(TreeIterator { n, code, done: false })
}

fn decode_prufer(n: usize, code: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a simple tree")
}

fn next_multiset_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every connected simple graph in which vertex `i` has degree `pi[i]`, by
/// backtracking over vertex pairs in lexicographic order.
pub fn enumerate_connected_graphs(pi: &DegreeSequence) -> Result<Vec<Graph>> {
    let n = pi.len();
    if n > GRAPH_LIMIT {
        return Err(Error::GuardExceeded { n, limit: GRAPH_LIMIT });
    }
    if !pi.is_graphical() {
        return Err(Error::NotGraphical);
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut residual = pi.as_slice().to_vec();
    let mut chosen = Vec::new();
    let mut out = Vec::new();
    fill(n, &pairs, 0, &mut residual, &mut chosen, &mut out);
    Ok(out)
}

fn fill(
    n: usize,
    pairs: &[(usize, usize)],
    k: usize,
    residual: &mut [usize],
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Graph>,
) {
    if k == pairs.len() {
        if residual.iter().all(|&r| r == 0) {
            let g = Graph::from_edges(n, chosen).expect("distinct pairs");
            if g.is_connected() {
                out.push(g);
            }
        }
        return;
    }
    let (u, v) = pairs[k];
    // Pairs left for u after this one: (u, v+1..n).
    let later_u = n - 1 - v;
    if residual[u] > later_u + 1 {
        return;
    }
    if residual[u] > 0 && residual[v] > 0 {
        residual[u] -= 1;
        residual[v] -= 1;
        chosen.push((u, v));
        if residual[u] <= later_u {
            fill(n, pairs, k + 1, residual, chosen, out);
        }
        chosen.pop();
        residual[u] += 1;
        residual[v] += 1;
    }
    if residual[u] <= later_u {
        fill(n, pairs, k + 1, residual, chosen, out);
    }
}

/// Graph families with known spectral radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// `K_{1,k}` with `k` leaves.
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    pub fn graph(&self) -> Result<Graph> {
        self.check()?;
        Ok(match *self {
            Family::Path(n) => Graph::path(n),
            Family::Cycle(n) => Graph::cycle(n),
            Family::Star(k) => Graph::star(k),
            Family::Complete(n) => Graph::complete(n),
            Family::CompleteBipartite(s, t) => Graph::complete_bipartite(s, t),
        })
    }

    fn check(&self) -> Result<()> {
        let ok = match *self {
            Family::Path(n) | Family::Complete(n) => n >= 1,
            Family::Cycle(n) => n >= 3,
            Family::Star(k) => k >= 1,
            Family::CompleteBipartite(s, t) => s >= 1 && t >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(alloc::format!("invalid family parameters {self:?}")))
        }
    }
}

/// `λ` in closed form: `2cos(π/(n+1))`, `2`, `√k`, `n − 1`, `√(st)`.
pub fn closed_form_lambda(family: Family) -> Result<f64> {
    family.check()?;
    Ok(match family {
        Family::Path(n) => 2.0 * libm::cos(core::f64::consts::PI / (n as f64 + 1.0)),
        Family::Cycle(_) => 2.0,
        Family::Star(k) => libm::sqrt(k as f64),
        Family::Complete(n) => (n - 1) as f64,
        Family::CompleteBipartite(s, t) => libm::sqrt((s * t) as f64),
    })
}

/// Backtracking isomorphism test, pruned by degree.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_map(g, h, 0, &mut map, &mut used)
}

fn extend_map(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_map(g, h, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}
