mod common;

use common::{er, er_corpus, jacobi_lambda_max, random_chain_rows, rng};
use grent_core::oracle::{closed_form_lambda, Family};
use grent_core::spectral::{
    dynamical_entropy, max_entropy_chain, schwarz_constant, schwarz_estimate, solve_stationary,
    spectral_radius, MarkovChain,
};
use grent_core::Graph;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;

fn families() -> Vec<Family> {
    let mut out = Vec::new();
    for n in 2..=50 {
        out.push(Family::Path(n));
        out.push(Family::Complete(n));
        out.push(Family::Star(n - 1));
        if n >= 3 {
            out.push(Family::Cycle(n));
        }
    }
    for s in 1..=10 {
        for t in 1..=10 {
            out.push(Family::CompleteBipartite(s, t));
        }
    }
    out
}

#[test]
fn closed_form_families() {
    for f in families() {
        let g = f.graph().unwrap();
        let lambda = spectral_radius(&g).unwrap().lambda;
        let exact = closed_form_lambda(f).unwrap();
        assert!((lambda - exact).abs() <= 1e-10, "{f:?}: {lambda} vs {exact}");
    }
}

#[test]
fn agrees_with_jacobi_on_random_graphs() {
    for g in er_corpus(20) {
        let lambda = spectral_radius(&g).unwrap().lambda;
        let reference = jacobi_lambda_max(&g);
        assert!((lambda - reference).abs() <= 1e-9, "{lambda} vs {reference}");
    }
}

#[test]
fn eigenpair_residual_and_sandwich() {
    for g in er_corpus(20) {
        let s = spectral_radius(&g).unwrap();
        assert!(s.perron.iter().all(|&x| x > 0.0));
        assert!((s.perron.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        let mut worst: f64 = 0.0;
        for v in 0..g.n() {
            let af: f64 = g.neighbors(v).iter().map(|&w| s.perron[w]).sum();
            worst = worst.max((af - s.lambda * s.perron[v]).abs());
        }
        let fmax = s.perron.iter().copied().fold(0.0, f64::max);
        assert!(worst / (s.lambda * fmax) <= 1e-10);
        let st = g.degree_stats();
        assert!(st.min as f64 <= st.avg() && st.avg() <= s.lambda + 1e-12);
        assert!(s.lambda <= st.max as f64 + 1e-12);
    }
}

#[test]
fn adding_edges_never_decreases_lambda() {
    let mut r = rng(5);
    for trial in 0..50 {
        let g = er(20, 0.15, 300 + trial);
        let before = spectral_radius(&g).unwrap().lambda;
        let mut h = g.clone();
        loop {
            let (u, v) = (r.random_range(0..20), r.random_range(0..20));
            if u != v && !h.has_edge(u, v) {
                h.add_edge(u, v).unwrap();
                break;
            }
        }
        assert!(spectral_radius(&h).unwrap().lambda >= before - 1e-12);
    }
}

fn walk_count_dense(g: &Graph, k: u32) -> BigUint {
    // Independent reference: sum of entries of A^k by repeated dense products.
    let n = g.n();
    let mut a = vec![vec![BigUint::from(0u32); n]; n];
    for (u, v) in g.edges() {
        a[u][v] = BigUint::from(1u32);
        a[v][u] = BigUint::from(1u32);
    }
    let mut p: Vec<Vec<BigUint>> =
        (0..n).map(|i| (0..n).map(|j| BigUint::from((i == j) as u32)).collect()).collect();
    for _ in 0..k {
        let mut next = vec![vec![BigUint::from(0u32); n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[l].iter().all(|x| *x == BigUint::from(0u32)) || p[i][l] == BigUint::from(0u32) {
                    continue;
                }
                for j in 0..n {
                    if a[l][j] != BigUint::from(0u32) {
                        next[i][j] += &p[i][l];
                    }
                }
            }
        }
        p = next;
    }
    p.into_iter().flatten().sum()
}

#[test]
fn schwarz_constants_match_dense_powers() {
    for (i, g) in er_corpus(4).into_iter().enumerate() {
        for k in [0, 1, 2, 5, 9] {
            assert_eq!(schwarz_constant(&g, k), walk_count_dense(&g, k), "graph {i}, k {k}");
        }
    }
    let c5 = Graph::cycle(5);
    assert_eq!(schwarz_constant(&c5, 20), BigUint::from(5u64 << 20));
}

#[test]
fn schwarz_estimate_brackets_lambda() {
    // 1ᵀA^k1 lies between λ^k and n·λ^k for a connected graph.
    for g in er_corpus(10) {
        let lambda = spectral_radius(&g).unwrap().lambda;
        for k in [8, 16, 32, 64] {
            let est = schwarz_estimate(&g, k);
            assert!(est >= lambda * (1.0 - 1e-12));
            assert!(est <= lambda * (g.n() as f64).powf(1.0 / k as f64) * (1.0 + 1e-12));
        }
    }
}

#[test]
fn variational_principle() {
    let mut r = rng(77);
    for seed in 0..20 {
        let g = er(20 + (seed as usize % 4) * 10, 0.2, seed);
        let log_lambda = spectral_radius(&g).unwrap().lambda.log2();
        let star = max_entropy_chain(&g).unwrap();
        assert!((dynamical_entropy(&star) - log_lambda).abs() <= 1e-9);
        for _ in 0..100 {
            let chain = MarkovChain::from_rows(&g, random_chain_rows(&g, &mut r)).unwrap();
            assert!(dynamical_entropy(&chain) <= log_lambda + 1e-9);
        }
    }
}

#[test]
fn max_entropy_chain_structure() {
    for g in er_corpus(10) {
        let s = spectral_radius(&g).unwrap();
        let chain = max_entropy_chain(&g).unwrap();
        assert!(chain.row_sum_error() <= 1e-12);
        assert!(chain.stationary_residual() <= 1e-10);
        // Reversibility with respect to f².
        for (u, v) in g.edges() {
            let ratio = chain.prob(u, v) / chain.prob(v, u);
            let expected = (s.perron[v] / s.perron[u]).powi(2);
            assert!((ratio - expected).abs() <= 1e-10 * expected);
        }
        // Closed-form stationary agrees with the linear solve.
        let rows: Vec<Vec<(usize, f64)>> = (0..g.n()).map(|i| chain.row(i).to_vec()).collect();
        let solved = solve_stationary(&rows).unwrap();
        for (a, b) in chain.stationary().iter().zip(&solved) {
            assert!((a - b).abs() <= 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn lambda_is_label_invariant(seed in 0u64..10_000, n in 3usize..30, shift in 1usize..29) {
        let g = er(n, 0.3, seed);
        let perm: Vec<usize> = (0..n).map(|v| (v + shift) % n).collect();
        let h = g.relabel(&perm);
        let a = spectral_radius(&g).unwrap().lambda;
        let b = spectral_radius(&h).unwrap().lambda;
        prop_assert!((a - b).abs() <= 1e-11);
    }

    #[test]
    fn lambda_at_least_sqrt_max_degree(seed in 0u64..10_000, n in 2usize..40) {
        let g = er(n, 0.25, seed);
        let s = spectral_radius(&g).unwrap();
        let st = g.degree_stats();
        prop_assert!(s.lambda + 1e-12 >= (st.max as f64).sqrt());
        prop_assert!(s.lambda + 1e-12 >= st.avg());
    }
}
