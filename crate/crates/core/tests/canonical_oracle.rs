mod common;

use std::collections::HashMap;

use common::{all_graphs, brute_canonical, for_each_permutation};
use topoidx::constructions::{bouquet, cycle};
use topoidx::enumeration::{canonical_form, CanonicalForm, MAX_CANONICAL_ORDER};
use topoidx::graph::graph6;
use topoidx::{Error, Graph};

/// Canonical forms must partition graphs exactly as the brute-force
/// invariant does.
fn check_partition(n: usize) {
    let mut by_oracle: HashMap<u64, CanonicalForm> = HashMap::new();
    let mut by_form: HashMap<CanonicalForm, u64> = HashMap::new();
    for g in all_graphs(n) {
        let oracle = brute_canonical(&g);
        let form = canonical_form(&g).unwrap();
        assert_eq!(*by_oracle.entry(oracle).or_insert(form), form, "{g:?}");
        assert_eq!(*by_form.entry(form).or_insert(oracle), oracle, "{g:?}");
    }
}

#[test]
fn partitions_match_brute_force_up_to_six() {
    for n in 1..=6 {
        check_partition(n);
    }
}

#[test]
fn class_counts_match_known_values() {
    // All graphs up to isomorphism.
    let expected = [1, 2, 4, 11, 34, 156];
    for (n, &want) in (1..=6).zip(&expected) {
        let mut forms: Vec<_> = all_graphs(n).map(|g| canonical_form(&g).unwrap()).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), want, "n={n}");
    }
}

#[test]
fn invariant_under_every_relabelling() {
    let samples = [
        bouquet(&[3, 4]).unwrap(),
        bouquet(&[3, 3, 3]).unwrap(),
        cycle(7).unwrap(),
        Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3), (0, 5)]).unwrap(),
    ];
    for g in samples {
        let base = canonical_form(&g).unwrap();
        for_each_permutation(g.order(), |p| {
            assert_eq!(canonical_form(&g.permuted(p)).unwrap(), base);
        });
    }
}

#[test]
fn random_relabellings_up_to_ten() {
    let mut s = 0x9e3779b97f4a7c15u64;
    let mut next = || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        s
    };
    for _ in 0..300 {
        let n = 7 + (next() % 4) as usize;
        let density = next() % 100;
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if next() % 100 < density {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let form = canonical_form(&g).unwrap();
        assert_eq!(form.order(), n);
        assert_eq!(form.to_graph().size(), g.size());
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, (next() % (i as u64 + 1)) as usize);
        }
        assert_eq!(canonical_form(&g.permuted(&perm)).unwrap(), form);
        assert_eq!(brute_canonical(&form.to_graph()), brute_canonical(&g));
    }
}

#[test]
fn form_is_a_graph_of_the_same_class() {
    for g in all_graphs(5) {
        let form = canonical_form(&g).unwrap();
        assert_eq!(brute_canonical(&form.to_graph()), brute_canonical(&g));
        assert_eq!(graph6::decode(&form.graph6()).unwrap(), form.to_graph());
        // The form is a fixed point.
        assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
    }
}

#[test]
fn order_limit() {
    let g = cycle(MAX_CANONICAL_ORDER + 1).unwrap();
    assert!(matches!(canonical_form(&g), Err(Error::OrderTooLarge { .. })));
}
