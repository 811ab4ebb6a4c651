#![allow(dead_code)]

use grent_core::random::generate_er;
use grent_core::Graph;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

pub fn er(n: usize, p: f64, seed: u64) -> Graph {
    generate_er(n, p, seed).unwrap().graph
}

pub fn rng(seed: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

/// Connected ER graphs of assorted sizes and densities.
pub fn er_corpus(count: u64) -> Vec<Graph> {
    (0..count)
        .map(|s| {
            let n = 8 + (s as usize * 7) % 43;
            let p = 0.12 + 0.05 * (s % 5) as f64;
            er(n, p, 1000 + s)
        })
        .collect()
}

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_lambda_max(g: &Graph) -> f64 {
    let n = g.n();
    let mut a = vec![vec![0.0f64; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

/// A random row-stochastic matrix supported on the edges of `g`.
pub fn random_chain_rows(g: &Graph, rng: &mut Xoshiro256PlusPlus) -> Vec<Vec<(usize, f64)>> {
    (0..g.n())
        .map(|u| {
            let w: Vec<f64> = g.neighbors(u).iter().map(|_| rng.random::<f64>() + 1e-3).collect();
            let total: f64 = w.iter().sum();
            g.neighbors(u).iter().zip(w).map(|(&v, x)| (v, x / total)).collect()
        })
        .collect()
}
