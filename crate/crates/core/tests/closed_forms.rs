use std::collections::VecDeque;

use num_bigint::BigUint;
use topoidx::constructions::cycle;
use topoidx::graph::MAX_ORDER;
use topoidx::indices::{cycle_closed_forms, cycle_profile, distance_profile, index_bundle};
use topoidx::Rational;

/// Adjacency lists of `C_n`, independent of the library's graph type.
fn cycle_lists(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|v| vec![(v + 1) % n, (v + n - 1) % n]).collect()
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<u64> {
    let mut dist = vec![u64::MAX; adj.len()];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if dist[v] == u64::MAX {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        }
    }
    dist
}

#[test]
fn closed_forms_match_bfs() {
    for n in 3..=200 {
        let adj = cycle_lists(n);
        let mut w = 0u64;
        let mut h = Rational::zero();
        for s in 0..n {
            for &d in bfs(&adj, s).iter().skip(s + 1) {
                w += d;
                h += Rational::ratio(1, d);
            }
        }
        let degrees: Vec<u64> = adj.iter().map(|l| l.len() as u64).collect();
        let m1: u64 = degrees.iter().map(|d| d * d).sum();
        let m2: u64 = (0..n).map(|v| degrees[v] * degrees[(v + 1) % n]).sum();
        let pi1: BigUint = degrees.iter().map(|&d| BigUint::from(d)).product();
        let pi2: BigUint = degrees.iter().map(|&d| BigUint::from(d).pow(d as u32)).product();

        let c = cycle_closed_forms(n).unwrap();
        assert_eq!(c.wiener, w, "n={n}");
        assert_eq!(c.harary, h, "n={n}");
        assert_eq!((c.m1, c.m2), (m1, m2), "n={n}");
        assert_eq!((&c.pi1, &c.pi2), (&pi1, &pi2), "n={n}");
        let p = cycle_profile(n).unwrap();
        assert_eq!((p.wiener(), p.reciprocal_sum()), (w, h), "n={n}");

        if n <= MAX_ORDER {
            let g = cycle(n).unwrap();
            assert_eq!(index_bundle(&g).unwrap(), c, "n={n}");
            assert_eq!(distance_profile(&g).unwrap(), p, "n={n}");
        }
    }
}
