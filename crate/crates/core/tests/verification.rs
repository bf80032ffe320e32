mod common;

use common::brute_canonical;
use topoidx::constructions::{bouquet, cycle};
use topoidx::enumeration::{canonical_form, enumerate, EnumSpec, GraphClass};
use topoidx::indices::{cycle_closed_forms, index_bundle, IndexKind, IndexValue};
use topoidx::verification::{
    claim1_check, claim1_range, crossing_table, extremal_scan, theorem_suite, vertex_domination_check, Direction,
};
use topoidx::Rational;

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

#[test]
fn eulerian_eight_harary_minimum() {
    let rep = extremal_scan(GraphClass::Eulerian, 8, IndexKind::Harary, Direction::Min, 2).unwrap();
    assert_eq!(rep.best_value, IndexValue::Fraction(r("47/3")));
    assert_eq!(rep.best_witnesses, vec![canonical_form(&cycle(8).unwrap()).unwrap()]);
    assert_eq!(rep.second_value, Some(IndexValue::Fraction(r("101/6"))));
    let w = &rep.second_witnesses;
    assert_eq!(w.len(), 1);
    assert_eq!(brute_canonical(&w[0].to_graph()), brute_canonical(&bouquet(&[6, 3]).unwrap()));
    assert!(r("101/6") < r("52/3"));
}

#[test]
fn witnesses_rebuild_to_reported_values() {
    for kind in IndexKind::ALL {
        for dir in [Direction::Min, Direction::Max] {
            let rep = extremal_scan(GraphClass::Eulerian, 7, kind, dir, 1).unwrap();
            for w in &rep.best_witnesses {
                assert_eq!(index_bundle(&w.to_graph()).unwrap().get(kind), rep.best_value);
            }
            for w in &rep.second_witnesses {
                assert_eq!(Some(index_bundle(&w.to_graph()).unwrap().get(kind)), rep.second_value);
            }
            let second = rep.second_value.clone().unwrap();
            match dir {
                Direction::Min => assert!(rep.best_value < second),
                Direction::Max => assert!(rep.best_value > second),
            }
        }
    }
}

#[test]
fn scans_agree_across_worker_counts() {
    for (class, n) in [(GraphClass::Eulerian, 8), (GraphClass::TwoEdgeConnected, 6)] {
        for kind in [IndexKind::Wiener, IndexKind::Harary, IndexKind::M2, IndexKind::Pi1] {
            let one = extremal_scan(class, n, kind, Direction::Min, 1).unwrap();
            let many = extremal_scan(class, n, kind, Direction::Min, 4).unwrap();
            assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&many).unwrap());
        }
    }
}

#[test]
fn second_minimum_zagreb_values() {
    for n in 5..=7u64 {
        let m2 = extremal_scan(GraphClass::Eulerian, n as usize, IndexKind::M2, Direction::Min, 1).unwrap();
        assert_eq!(m2.second_value, Some(IndexValue::from(4 * n + 20)));
        let m1 = extremal_scan(GraphClass::Eulerian, n as usize, IndexKind::M1, Direction::Min, 1).unwrap();
        assert_eq!(m1.second_value, Some(IndexValue::from(4 * n + 12)));
        let bouquets: Vec<u64> = (3..=(n as usize + 1) / 2)
            .map(|a| brute_canonical(&bouquet(&[a, n as usize + 1 - a]).unwrap()))
            .collect();
        for w in &m1.second_witnesses {
            assert!(bouquets.contains(&brute_canonical(&w.to_graph())));
        }
    }
}

#[test]
fn two_connected_vertices_are_dominated() {
    for n in 3..=7 {
        let h = cycle_closed_forms(n).unwrap().harary;
        for g in enumerate(EnumSpec::new(n, GraphClass::TwoConnected).deduped(), 1).unwrap() {
            for v in vertex_domination_check(&g).unwrap() {
                assert!(v.dominated, "{g:?}");
                assert_eq!(v.threshold, h.scale(2, n as u64));
                assert!(v.reciprocal_sum >= v.threshold);
            }
        }
    }
}

#[test]
fn claim1_reciprocal_bound_holds() {
    let reports = claim1_range(40).unwrap();
    assert_eq!(reports.len(), (3..=20).map(|a| 41 - 2 * a + 1).sum::<usize>());
    for rep in &reports {
        let pairs = (rep.n * (rep.n - 1) / 2) as u64;
        assert_eq!(rep.s.pair_total(), pairs);
        assert_eq!(rep.t.pair_total(), pairs);
        assert!(rep.reciprocal_ok, "a={} b={}", rep.a, rep.b);
        assert_eq!(rep.reciprocal_margin, rep.s.reciprocal_sum() - rep.t.reciprocal_sum());
    }
    assert!(!claim1_check(3, 3).unwrap().separation_ok);
}

#[test]
fn crossing_threshold() {
    for row in crossing_table(13, 30).unwrap() {
        assert_eq!(row.h_g2 < row.h_g1, row.n >= 20, "n={}", row.n);
    }
}

#[test]
fn small_suite_passes_and_is_sorted() {
    let rep = theorem_suite(7, 6, 2).unwrap();
    assert!(rep.all_passed(), "{}", rep.to_text());
    let keys: Vec<_> = rep.claims.iter().map(|c| (c.id.clone(), c.n)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    for c in json["claims"].as_array().unwrap() {
        for k in ["id", "class", "n", "status", "value", "witnesses", "wall_ms"] {
            assert!(c.get(k).is_some(), "missing {k}");
        }
    }
    assert!(theorem_suite(11, 6, 1).is_err());
    assert!(theorem_suite(7, 9, 1).is_err());
}
