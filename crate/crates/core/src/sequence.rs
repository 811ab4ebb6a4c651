//! Degree sequences and the realizability tests on them.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

/// A degree sequence, always stored in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `degrees` into non-increasing order.
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Havel–Hakimi: repeatedly lay off the largest degree against the next
    /// largest ones; the sequence is graphical iff this ends at all zeros.
    pub fn is_graphical(&self) -> bool {
        if self.sum() % 2 == 1 {
            return false;
        }
        let mut residual = self.0.clone();
        loop {
            residual.sort_unstable_by(|a, b| b.cmp(a));
            while residual.last() == Some(&0) {
                residual.pop();
            }
            let Some((&d, rest)) = residual.split_first() else {
                return true;
            };
            if d > rest.len() {
                return false;
            }
            let mut next: Vec<usize> = Vec::with_capacity(rest.len());
            for (i, &r) in rest.iter().enumerate() {
                if i < d {
                    if r == 0 {
                        return false;
                    }
                    next.push(r - 1);
                } else {
                    next.push(r);
                }
            }
            residual = next;
        }
    }

    /// All degrees positive and `Σd = 2(n − 1)`.
    pub fn is_tree_sequence(&self) -> bool {
        let n = self.len();
        n >= 1 && self.0.iter().all(|&d| d >= 1 || n == 1) && self.sum() + 2 == 2 * n
    }

    /// Graphical with a connected realization: every degree positive (or the
    /// single-vertex sequence `(0)`) and `Σd ≥ 2(n − 1)`.
    pub fn has_connected_realization(&self) -> bool {
        let n = self.len();
        if n == 1 {
            return self.0[0] == 0;
        }
        n >= 2
            && self.0.iter().all(|&d| d >= 1)
            && self.sum() >= 2 * (n - 1)
            && self.is_graphical()
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(v: Vec<usize>) -> Self {
        DegreeSequence::new(v)
    }
}

impl From<&[usize]> for DegreeSequence {
    fn from(v: &[usize]) -> Self {
        DegreeSequence::new(v.to_vec())
    }
}

/// Every non-increasing tree degree sequence on `n` vertices.
pub fn tree_sequences(n: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    if n == 1 {
        out.push(DegreeSequence(alloc::vec![0]));
        return out;
    }
    if n < 2 {
        return out;
    }
    // Each vertex has degree 1 + extra, with the extras summing to n − 2.
    let mut current = Vec::with_capacity(n);
    fn rec(
        remaining: usize,
        slots: usize,
        cap: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<DegreeSequence>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(DegreeSequence(current.iter().map(|e| e + 1).collect()));
            }
            return;
        }
        for extra in (0..=cap.min(remaining)).rev() {
            current.push(extra);
            rec(remaining - extra, slots - 1, extra, current, out);
            current.pop();
        }
    }
    rec(n - 2, n, n - 2, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn seq(d: &[usize]) -> DegreeSequence {
        DegreeSequence::from(d)
    }

    #[test]
    fn sorts_on_construction() {
        assert_eq!(seq(&[1, 3, 2]).as_slice(), &[3, 2, 1]);
    }

    #[test]
    fn graphical_examples() {
        assert!(seq(&[4, 4, 3, 3, 2, 2, 2, 2, 2]).is_graphical());
        assert!(!seq(&[3, 1, 1]).is_graphical());
        assert!(!seq(&[5, 1, 1, 1, 1]).is_graphical());
        assert!(seq(&[2, 2, 2]).is_graphical());
        assert!(seq(&[0]).is_graphical());
    }

    #[test]
    fn tree_sequence_examples() {
        assert!(seq(&[4, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1]).is_tree_sequence());
        assert!(!seq(&[2, 2, 2]).is_tree_sequence());
        assert!(seq(&[1, 1]).is_tree_sequence());
        assert!(!seq(&[2, 2, 0, 0]).is_tree_sequence());
    }

    #[test]
    fn connected_realizability() {
        assert!(seq(&[1, 1]).has_connected_realization());
        assert!(!seq(&[1, 1, 1, 1]).has_connected_realization());
        assert!(seq(&[2, 2, 2, 2]).has_connected_realization());
        assert!(!seq(&[3, 1, 1]).has_connected_realization());
    }

    #[test]
    fn tree_sequence_enumeration() {
        assert_eq!(tree_sequences(2), vec![seq(&[1, 1])]);
        assert_eq!(tree_sequences(4), vec![seq(&[3, 1, 1, 1]), seq(&[2, 2, 1, 1])]);
        // Partitions of n − 2 into at most n parts: p(6) = 11 for n = 8.
        assert_eq!(tree_sequences(8).len(), 11);
        assert!(tree_sequences(8).iter().all(DegreeSequence::is_tree_sequence));
    }
}
