mod common;

use std::collections::BTreeSet;

use common::er;
use grent_core::{DegreeSequence, Graph};
use proptest::prelude::*;

/// Degree sequences of every labeled simple graph on `n` vertices.
fn realizable_sequences(n: usize) -> BTreeSet<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut d = vec![0; n];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                d[u] += 1;
                d[v] += 1;
            }
        }
        d.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(d);
    }
    out
}

#[test]
fn havel_hakimi_matches_exhaustive_realization() {
    for n in 1..=6 {
        let realizable = realizable_sequences(n);
        fn rec(n: usize, cap: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if cur.len() == n {
                f(cur);
                return;
            }
            for d in (0..=cap).rev() {
                cur.push(d);
                rec(n, d, cur, f);
                cur.pop();
            }
        }
        rec(n, n - 1, &mut Vec::new(), &mut |d| {
            let graphical = DegreeSequence::from(d.to_vec()).is_graphical();
            assert_eq!(graphical, realizable.contains(d), "{d:?}");
        });
    }
}

#[test]
fn spec_sequences() {
    assert_eq!(Graph::star(4).degree_sequence().as_slice(), &[4, 1, 1, 1, 1]);
    assert_eq!(Graph::cycle(6).degree_sequence().as_slice(), &[2; 6]);
    assert!(Graph::path(4).is_connected());
    assert!(!Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
    let st = Graph::cycle(7).degree_stats();
    assert_eq!((st.min, st.avg(), st.max), (2, 2.0, 2));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn construction_keeps_graph_simple(n in 1usize..30, raw in prop::collection::vec((0usize..30, 0usize..30), 0..120)) {
        let edges: Vec<(usize, usize)> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let degree_sum: usize = (0..n).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.m());
        for u in 0..n {
            prop_assert!(g.neighbors(u).windows(2).all(|w| w[0] < w[1]));
            for &v in g.neighbors(u) {
                prop_assert!(v != u);
                prop_assert!(g.has_edge(v, u));
            }
        }
        let pi = g.degree_sequence();
        prop_assert!(pi.as_slice().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(pi.is_graphical());
        let st = g.degree_stats();
        prop_assert!(st.min as f64 <= st.avg() && st.avg() <= st.max as f64);
    }

    #[test]
    fn sequences_always_sorted(d in prop::collection::vec(0usize..20, 0..40)) {
        let pi = DegreeSequence::from(d.clone());
        prop_assert!(pi.as_slice().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(pi.sum(), d.iter().sum::<usize>());
    }

    #[test]
    fn er_degree_sequences_are_graphical(seed in 0u64..100_000, n in 1usize..60) {
        let g = er(n, (3.0 * (n as f64 + 1.0).ln() / n as f64).min(1.0), seed);
        prop_assert!(g.is_connected());
        prop_assert!(g.degree_sequence().is_graphical());
    }
}
