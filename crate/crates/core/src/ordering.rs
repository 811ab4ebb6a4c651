//! Breadth-first orderings with decreasing degrees (BFD-orderings).
//!
//! Start from a vertex of largest degree, append its neighbors sorted by
//! decreasing degree, then the not-yet-listed neighbors of the second vertex,
//! and so on. The parent of a vertex is its first-listed neighbor. The
//! resulting order `≺` is a BFD-ordering when
//!
//! 1. `w₁ ≺ w₂` implies every child of `w₁` precedes every child of `w₂`, and
//! 2. `v ≺ u` implies `d_v ≥ d_u`.
//!
//! Graphs maximizing `λ` or `R_α` (`α > 0`) within a degree class admit such
//! an ordering; for trees the BFD-tree is the unique maximizer.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::DegreeSequence;

/// Default node budget for [`bfd_realize`] and [`bfd_order_search`].
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// A BFD-ordering witness: `order[k]` is the vertex of rank `k`; `layer` and
/// `parent` are indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BfdOrdering {
    pub order: Vec<usize>,
    pub layer: Vec<usize>,
    pub parent: Vec<Option<usize>>,
}

impl BfdOrdering {
    /// `rank[v]` = position of `v` in `order`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.order.len()];
        for (k, &v) in self.order.iter().enumerate() {
            rank[v] = k;
        }
        rank
    }

    /// Checks that `f_u > f_v` implies `u ≺ v`, treating values within
    /// `rel_tol` (relative) as equal.
    pub fn consistent_with(&self, f: &[f64], rel_tol: f64) -> bool {
        let rank = self.ranks();
        let scale = f.iter().copied().fold(0.0, f64::max);
        for u in 0..f.len() {
            for v in 0..f.len() {
                if f[u] - f[v] > rel_tol * scale && rank[u] > rank[v] {
                    return false;
                }
            }
        }
        true
    }
}

/// True iff `ord` is a BFD-ordering of `g`: a permutation rooted at a
/// maximum-degree vertex, with BFS-consistent layers, first-listed parents,
/// parent-grouped children (property 1) and non-increasing degrees
/// (property 2).
pub fn bfd_verify(g: &Graph, ord: &BfdOrdering) -> bool {
    let n = g.n();
    if ord.order.len() != n || ord.layer.len() != n || ord.parent.len() != n || n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &ord.order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let rank = ord.ranks();
    let root = ord.order[0];

    // Property 2 (and hence a maximum-degree root).
    if ord.order.windows(2).any(|w| g.degree(w[0]) < g.degree(w[1])) {
        return false;
    }
    // Layers are BFS distances from the root.
    let dist = g.bfs_distances(root);
    if dist.iter().zip(&ord.layer).any(|(d, &l)| *d != Some(l)) {
        return false;
    }
    if ord.order.windows(2).any(|w| ord.layer[w[0]] > ord.layer[w[1]]) {
        return false;
    }
    // Parents: the first-listed neighbor, one layer up.
    for v in 0..n {
        let expected = if v == root {
            None
        } else {
            g.neighbors(v).iter().copied().min_by_key(|&w| rank[w])
        };
        if ord.parent[v] != expected {
            return false;
        }
        if let Some(p) = expected {
            if rank[p] > rank[v] || ord.layer[v] != ord.layer[p] + 1 {
                return false;
            }
        }
    }
    // Property 1: children appear grouped in the order of their parents.
    let parent_ranks: Vec<usize> = ord.order[1..]
        .iter()
        .map(|&v| rank[ord.parent[v].expect("non-root vertices have parents")])
        .collect();
    parent_ranks.windows(2).all(|w| w[0] <= w[1])
}

/// Realizes `pi` as a connected graph that carries a BFD-ordering.
///
/// Vertex `i` receives degree `pi[i]`, and vertices are listed in index
/// order. Vertices are processed in that order; each one is connected to as
/// many unprocessed vertices as its residual degree, choosing the largest
/// residual degrees first (Havel–Hakimi), preferring vertices that are not yet
/// listed on ties, and then lower indices. New vertices are always taken in
/// index order, which keeps degrees non-increasing along the list.
///
/// After every step the remaining residual problem must still admit a
/// completion that attaches every unlisted vertex: it must be graphical, have
/// at least as many edges as unlisted vertices, and have a listed vertex with
/// spare degree. If a greedy step breaks this, the next candidate choice is
/// tried (depth-first, bounded by [`DEFAULT_BUDGET`] nodes).
pub fn bfd_realize(pi: &DegreeSequence) -> Result<(Graph, BfdOrdering)> {
    bfd_realize_with_budget(pi, DEFAULT_BUDGET)
}

pub fn bfd_realize_with_budget(pi: &DegreeSequence, budget: usize) -> Result<(Graph, BfdOrdering)> {
    let n = pi.len();
    if n == 0 {
        return Err(Error::InvalidArgument("empty degree sequence".into()));
    }
    if !pi.is_graphical() {
        return Err(Error::NotGraphical);
    }
    if !pi.has_connected_realization() {
        return Err(Error::NotConnectedRealizable);
    }
    if n == 1 {
        return Ok((Graph::empty(1), BfdOrdering { order: vec![0], layer: vec![0], parent: vec![None] }));
    }
    let mut r = Realizer {
        n,
        residual: pi.as_slice().to_vec(),
        placed: 1,
        parent: vec![None; n],
        edges: Vec::new(),
        nodes: 0,
        budget,
    };
    if !r.process(0)? {
        return Err(Error::NotConnectedRealizable);
    }
    let graph = Graph::from_edges(n, &r.edges)?;
    let mut layer = vec![0; n];
    for v in 1..n {
        layer[v] = layer[r.parent[v].expect("listed vertices have parents")] + 1;
    }
    Ok((graph, BfdOrdering { order: (0..n).collect(), layer, parent: r.parent }))
}

struct Realizer {
    n: usize,
    residual: Vec<usize>,
    /// Vertices `0..placed` are listed.
    placed: usize,
    parent: Vec<Option<usize>>,
    edges: Vec<(usize, usize)>,
    nodes: usize,
    budget: usize,
}

#[derive(Clone, Copy)]
struct Candidate {
    vertex: usize,
    residual: usize,
    unlisted: bool,
}

impl Realizer {
    fn process(&mut self, u: usize) -> Result<bool> {
        if u == self.n {
            return Ok(self.residual.iter().all(|&r| r == 0));
        }
        if u >= self.placed {
            return Ok(false);
        }
        let need = self.residual[u];
        if need == 0 {
            return self.process(u + 1);
        }

        let mut cands: Vec<Candidate> = (u + 1..self.placed)
            .filter(|&v| self.residual[v] > 0)
            .map(|v| Candidate { vertex: v, residual: self.residual[v], unlisted: false })
            .chain((self.placed..self.n).map(|v| Candidate {
                vertex: v,
                residual: self.residual[v],
                unlisted: true,
            }))
            .collect();
        cands.sort_by(|a, b| {
            b.residual
                .cmp(&a.residual)
                .then(b.unlisted.cmp(&a.unlisted))
                .then(a.vertex.cmp(&b.vertex))
        });
        if cands.len() < need {
            return Ok(false);
        }

        let mut combo: Vec<usize> = (0..need).collect();
        let mut first = true;
        loop {
            if self.is_prefix_of_unlisted(&cands, &combo) {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Err(Error::BudgetExceeded(self.budget));
                }
                let chosen: Vec<usize> = combo.iter().map(|&i| cands[i].vertex).collect();
                let new_count = combo.iter().filter(|&&i| cands[i].unlisted).count();
                self.apply(u, &chosen, new_count);
                // The leading combination is a Havel–Hakimi lay-off, which
                // preserves graphicality on its own.
                if self.feasible(u, !first) && self.process(u + 1)? {
                    return Ok(true);
                }
                self.undo(u, &chosen, new_count);
            }
            first = false;
            if !next_combination(&mut combo, cands.len()) {
                return Ok(false);
            }
        }
    }

    fn is_prefix_of_unlisted(&self, cands: &[Candidate], combo: &[usize]) -> bool {
        let mut chosen_new: Vec<usize> =
            combo.iter().filter(|&&i| cands[i].unlisted).map(|&i| cands[i].vertex).collect();
        chosen_new.sort_unstable();
        chosen_new.iter().enumerate().all(|(k, &v)| v == self.placed + k)
    }

    fn apply(&mut self, u: usize, chosen: &[usize], new_count: usize) {
        self.residual[u] -= chosen.len();
        for &v in chosen {
            self.residual[v] -= 1;
            self.edges.push((u, v));
            if v >= self.placed {
                self.parent[v] = Some(u);
            }
        }
        self.placed += new_count;
    }

    fn undo(&mut self, u: usize, chosen: &[usize], new_count: usize) {
        self.placed -= new_count;
        for &v in chosen {
            self.residual[v] += 1;
            self.edges.pop();
            if v >= self.placed {
                self.parent[v] = None;
            }
        }
        self.residual[u] += chosen.len();
    }

    /// Can the residual problem on vertices after `u` still be completed
    /// into a connected graph?
    fn feasible(&self, u: usize, check_graphical: bool) -> bool {
        let unlisted = self.n - self.placed;
        let listed_spare: usize = self.residual[u + 1..self.placed].iter().sum();
        let unlisted_sum: usize = self.residual[self.placed..].iter().sum();
        if unlisted > 0 && (listed_spare == 0 || (listed_spare + unlisted_sum) / 2 < unlisted) {
            return false;
        }
        !check_graphical || erdos_gallai(&self.residual[u + 1..])
    }
}

/// Erdős–Gallai test for a (not necessarily sorted) sequence.
fn erdos_gallai(degrees: &[usize]) -> bool {
    let mut d: Vec<usize> = degrees.iter().copied().filter(|&x| x > 0).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = d.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    let n = d.len();
    let mut prefix = 0usize;
    // `tail` tracks Σ_{i>k} min(d_i, k+1); recompute lazily via a pointer.
    for k in 0..n {
        prefix += d[k];
        let kk = k + 1;
        let rhs: usize = kk * (kk - 1) + d[kk..].iter().map(|&x| x.min(kk)).sum::<usize>();
        if prefix > rhs {
            return false;
        }
    }
    true
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Searches for a BFD-ordering of a connected graph by backtracking over
/// maximum-degree roots and over the arrangement of equal-degree vertices
/// inside each child block. `Ok(None)` means no BFD-ordering exists.
pub fn bfd_order_search(g: &Graph) -> Result<Option<BfdOrdering>> {
    bfd_order_search_with_budget(g, DEFAULT_BUDGET)
}

pub fn bfd_order_search_with_budget(g: &Graph, budget: usize) -> Result<Option<BfdOrdering>> {
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut search = OrderSearch {
        g,
        order: Vec::with_capacity(n),
        parent: vec![None; n],
        listed: vec![false; n],
        nodes: 0,
        budget,
    };
    for root in (0..n).filter(|&v| g.degree(v) == max_deg) {
        search.order.push(root);
        search.listed[root] = true;
        if search.extend(0)? {
            let mut layer = vec![0; n];
            for &v in &search.order[1..] {
                layer[v] = layer[search.parent[v].expect("non-root")] + 1;
            }
            return Ok(Some(BfdOrdering { order: search.order, layer, parent: search.parent }));
        }
        search.order.pop();
        search.listed[root] = false;
    }
    Ok(None)
}

struct OrderSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    listed: Vec<bool>,
    nodes: usize,
    budget: usize,
}

impl OrderSearch<'_> {
    /// Processes `order[idx]`: appends its unlisted neighbors in every
    /// admissible arrangement and recurses.
    fn extend(&mut self, idx: usize) -> Result<bool> {
        let n = self.g.n();
        if self.order.len() == n {
            return Ok(true);
        }
        if idx >= self.order.len() {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let w = self.order[idx];
        let last_deg = self.g.degree(*self.order.last().expect("non-empty"));
        // Every vertex still to be listed must fit under the last degree.
        if (0..n).any(|v| !self.listed[v] && self.g.degree(v) > last_deg) {
            return Ok(false);
        }
        let mut children: Vec<usize> =
            self.g.neighbors(w).iter().copied().filter(|&v| !self.listed[v]).collect();
        children.sort_by(|&a, &b| self.g.degree(b).cmp(&self.g.degree(a)).then(a.cmp(&b)));
        for &c in &children {
            self.listed[c] = true;
            self.parent[c] = Some(w);
        }
        let base = self.order.len();
        self.order.extend_from_slice(&children);
        let found = self.arrange(idx, base, 0)?;
        if !found {
            self.order.truncate(base);
            for &c in &children {
                self.listed[c] = false;
                self.parent[c] = None;
            }
        }
        Ok(found)
    }

    /// Permutes each equal-degree run of `order[base..]` starting at `start`.
    fn arrange(&mut self, idx: usize, base: usize, start: usize) -> Result<bool> {
        let len = self.order.len();
        let from = base + start;
        if from >= len {
            return self.extend(idx + 1);
        }
        let deg = self.g.degree(self.order[from]);
        let mut to = from + 1;
        while to < len && self.g.degree(self.order[to]) == deg {
            to += 1;
        }
        // Permutations of order[from..to] in lexicographic order, starting sorted.
        let mut run: Vec<usize> = self.order[from..to].to_vec();
        run.sort_unstable();
        loop {
            self.order[from..to].copy_from_slice(&run);
            if self.arrange(idx, base, to - base)? {
                return Ok(true);
            }
            if !next_permutation(&mut run) {
                return Ok(false);
            }
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
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

/// The BFD-tree of a tree sequence: vertices in index order, root `0` gets
/// `d_0` children and every later vertex `d_i − 1`, filled level by level.
pub fn bfd_tree(pi: &DegreeSequence) -> Result<(Graph, BfdOrdering)> {
    if !pi.is_tree_sequence() {
        return Err(Error::NotTreeSequence);
    }
    let n = pi.len();
    let d = pi.as_slice();
    let mut parent = vec![None; n];
    let mut layer = vec![0; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut next = 1;
    for v in 0..n {
        let children = if v == 0 { d[0] } else { d[v] - 1 };
        for c in next..next + children {
            parent[c] = Some(v);
            layer[c] = layer[v] + 1;
            edges.push((v, c));
        }
        next += children;
    }
    debug_assert_eq!(next, n);
    let graph = Graph::from_edges(n, &edges)?;
    Ok((graph, BfdOrdering { order: (0..n).collect(), layer, parent }))
}

/// `π ⊲ π′`: the sequences differ and every prefix sum of `π` is at most the
/// corresponding prefix sum of `π′`.
pub fn majorizes(pi: &DegreeSequence, pi_prime: &DegreeSequence) -> Result<bool> {
    if pi.len() != pi_prime.len() {
        return Err(Error::LengthMismatch(pi.len(), pi_prime.len()));
    }
    if pi == pi_prime {
        return Ok(false);
    }
    let mut a = 0usize;
    let mut b = 0usize;
    for (&x, &y) in pi.as_slice().iter().zip(pi_prime.as_slice()) {
        a += x;
        b += y;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bondy's sufficient condition for a degree sequence to be forcibly
/// connected, evaluated literally: `d_i ≥ n − i` for every `i ≥ d_0 + 2`
/// (0-based, non-increasing).
///
/// This is a flag, not a connectivity decision. Read this way the condition
/// accepts `(1, 1, 1, 1)`, which is realized by the disconnected `2K₂`.
pub fn forcibly_connected_bondy(pi: &DegreeSequence) -> bool {
    let d = pi.as_slice();
    let n = d.len();
    let start = d.first().map_or(0, |&d0| d0 + 2);
    (start..n).all(|i| d[i] >= n - i)
}
