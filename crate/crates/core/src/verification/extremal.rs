use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::Serialize;

use super::stats::{fingerprint, ClassStats, Fingerprint, Scales, ScanOptions, Slot, TopTwo, Violations};
use super::Direction;
use crate::enumeration::{canonical_form_view, CanonicalForm, EnumSpec, Enumerator, GraphClass, WalkCounts};
use crate::error::Result;
use crate::graph::{graph_from_key, Graph};
use crate::indices::{
    cycle_closed_forms, degree_sequence_indices, histogram_degrees, IndexKind, IndexValue, Rational,
};

/// Which labelled graphs a witness pass should pick up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Target {
    Ordinal { kind: IndexKind, value: u64 },
    Histograms(Vec<u64>),
}

impl Target {
    fn matches(&self, fp: &Fingerprint) -> bool {
        match self {
            Target::Ordinal { kind: IndexKind::Wiener, value } => fp.wiener == *value,
            Target::Ordinal { kind: IndexKind::Harary, value } => fp.harary_scaled == *value,
            Target::Ordinal { kind: IndexKind::M2, value } => fp.m2 == *value,
            Target::Ordinal { .. } => unreachable!("degree-sequence indices use histogram targets"),
            Target::Histograms(h) => h.contains(&fp.histogram),
        }
    }
}

/// One attained value and the labelled graphs attaining it.
#[derive(Clone, Debug)]
pub struct RankEntry {
    pub value: IndexValue,
    /// Labelled class members with this value.
    pub count: u64,
    /// Of those, how many are not cycles.
    pub non_cycle: u64,
    pub example: Graph,
    pub non_cycle_example: Option<Graph>,
    pub(crate) target: Target,
}

#[derive(Clone, Debug)]
pub struct Ranking {
    pub best: RankEntry,
    pub second: Option<RankEntry>,
}

#[derive(Clone, Debug)]
pub struct DegreeSequenceRecord {
    /// Descending.
    pub degrees: Vec<usize>,
    pub count: u64,
    pub non_cycle: u64,
    pub example: Graph,
}

#[derive(Clone, Debug, Default)]
pub struct ViolationRecord {
    pub count: u64,
    pub example: Option<Graph>,
}

/// Exact results of one pass over a class.
#[derive(Clone, Debug)]
pub struct ClassSummary {
    pub class: GraphClass,
    pub n: usize,
    pub counts: WalkCounts,
    pub rankings: BTreeMap<(IndexKind, Direction), Ranking>,
    pub degree_sequences: Vec<DegreeSequenceRecord>,
    /// Fewest edges over non-cycle members, with the least-keyed example.
    pub non_cycle_min_size: Option<(usize, Graph)>,
    /// Members with `n * M1 < (2m)^2`, or equality without regularity.
    pub cauchy_schwarz: ViolationRecord,
    /// 2-connected members that received the per-vertex checks.
    pub two_connected: u64,
    pub not_dominated: ViolationRecord,
    pub thin_layer: ViolationRecord,
    pub below_threshold: ViolationRecord,
}

impl ClassSummary {
    pub fn ranking(&self, kind: IndexKind, direction: Direction) -> &Ranking {
        &self.rankings[&(kind, direction)]
    }
}

/// One exhaustive pass over `class` at order `n`.
///
/// With `vertex_checks`, every 2-connected member also gets the per-vertex
/// distance checks. This needs the low-link data that only the
/// 2-edge-connected and 2-connected walks compute.
pub fn scan_class(class: GraphClass, n: usize, workers: usize, vertex_checks: bool) -> Result<ClassSummary> {
    let en = Enumerator::new(EnumSpec::new(n, class))?;
    let scales = Scales::new(n);
    let cycle_h = cycle_closed_forms(n)?.harary;
    let cycle_h_scaled = cycle_h.scale(scales.lcm, 1).to_biguint().expect("L * H(C_n) is whole");
    let cycle_h_scaled = u64::try_from(cycle_h_scaled).expect("fits");
    let opts = ScanOptions {
        scales,
        vertex_threshold: vertex_checks.then_some(2 * cycle_h_scaled),
    };
    let (stats, counts) = en.scan(
        workers,
        ClassStats::new,
        |acc, m| acc.visit(m, &opts),
        ClassStats::merge,
    );
    Ok(summarize(class, n, counts, stats, &scales))
}

fn summarize(class: GraphClass, n: usize, counts: WalkCounts, stats: ClassStats, scales: &Scales) -> ClassSummary {
    let graph = |key: u64| graph_from_key(n, key);
    let entry = |slot: &Slot, value: IndexValue, target: Target| RankEntry {
        value,
        count: slot.count,
        non_cycle: slot.non_cycle,
        example: graph(slot.example),
        non_cycle_example: (slot.non_cycle > 0).then(|| graph(slot.non_cycle_example)),
        target,
    };
    let from_top = |t: &TopTwo, kind: IndexKind| {
        let to_value = |v: u64| match kind {
            IndexKind::Harary => IndexValue::Fraction(Rational::ratio(v, scales.lcm)),
            _ => IndexValue::from(v),
        };
        let mk = |s: &Slot| entry(s, to_value(s.value), Target::Ordinal { kind, value: s.value });
        Ranking {
            best: mk(t.slots[0].as_ref().expect("class is nonempty")),
            second: t.slots[1].as_ref().map(mk),
        }
    };

    let mut rankings = BTreeMap::new();
    for (kind, pair) in [
        (IndexKind::Wiener, &stats.wiener),
        (IndexKind::Harary, &stats.harary),
        (IndexKind::M2, &stats.m2),
    ] {
        for t in pair {
            rankings.insert((kind, t.direction), from_top(t, kind));
        }
    }

    // Degree-sequence indices: evaluate each histogram once, then group by
    // value since distinct sequences may collide.
    let mut hist: Vec<_> = stats.histograms.values().copied().collect();
    hist.sort_unstable_by_key(|s| s.value);
    let evaluated: Vec<_> = hist
        .iter()
        .map(|s| (s, degree_sequence_indices(&histogram_degrees(s.value))))
        .collect();
    for kind in [IndexKind::M1, IndexKind::Pi1, IndexKind::Pi2] {
        let mut by_value: BTreeMap<IndexValue, (Slot, Vec<u64>)> = BTreeMap::new();
        for (slot, (m1, pi1, pi2)) in &evaluated {
            let v = match kind {
                IndexKind::M1 => IndexValue::from(*m1),
                IndexKind::Pi1 => IndexValue::Integer(pi1.clone()),
                _ => IndexValue::Integer(pi2.clone()),
            };
            by_value
                .entry(v)
                .and_modify(|(agg, hs)| {
                    agg.count += slot.count;
                    agg.non_cycle += slot.non_cycle;
                    agg.example = agg.example.min(slot.example);
                    agg.non_cycle_example = agg.non_cycle_example.min(slot.non_cycle_example);
                    hs.push(slot.value);
                })
                .or_insert_with(|| (**slot, vec![slot.value]));
        }
        for direction in [Direction::Min, Direction::Max] {
            let mut ordered: Vec<_> = by_value.iter().collect();
            if direction == Direction::Max {
                ordered.reverse();
            }
            let mk = |(v, (s, hs)): (&IndexValue, &(Slot, Vec<u64>))| {
                entry(s, v.clone(), Target::Histograms(hs.clone()))
            };
            rankings.insert(
                (kind, direction),
                Ranking { best: mk(ordered[0]), second: ordered.get(1).copied().map(mk) },
            );
        }
    }

    let degree_sequences = evaluated
        .iter()
        .map(|(s, _)| DegreeSequenceRecord {
            degrees: histogram_degrees(s.value),
            count: s.count,
            non_cycle: s.non_cycle,
            example: graph(s.example),
        })
        .collect();
    let violations = |v: Violations| ViolationRecord { count: v.count, example: v.example.map(graph) };

    ClassSummary {
        class,
        n,
        counts,
        rankings,
        degree_sequences,
        non_cycle_min_size: stats.non_cycle_min_size.map(|(m, k)| (m as usize, graph(k))),
        cauchy_schwarz: violations(stats.cauchy_schwarz),
        two_connected: stats.two_connected,
        not_dominated: violations(stats.not_dominated),
        thin_layer: violations(stats.thin_layer),
        below_threshold: violations(stats.below_threshold),
    }
}

/// Canonical forms of every member hitting each target, in one pass.
pub(crate) fn collect_witnesses(
    class: GraphClass,
    n: usize,
    workers: usize,
    targets: &[Target],
) -> Result<Vec<Vec<CanonicalForm>>> {
    let en = Enumerator::new(EnumSpec::new(n, class))?;
    let scales = Scales::new(n);
    let (sets, _) = en.scan(
        workers,
        || vec![BTreeSet::new(); targets.len()],
        |acc: &mut Vec<BTreeSet<CanonicalForm>>, m| {
            let fp = fingerprint(m.graph.rows(), &scales);
            let mut canon = None;
            for (t, set) in targets.iter().zip(acc.iter_mut()) {
                if t.matches(&fp) {
                    set.insert(*canon.get_or_insert_with(|| canonical_form_view(m.graph)));
                }
            }
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                x.extend(y);
            }
            a
        },
    );
    Ok(sets.into_iter().map(|s| s.into_iter().collect()).collect())
}

/// Best and second-best distinct values of one index over one class, with
/// every non-isomorphic witness.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub class: GraphClass,
    pub n: usize,
    pub index: IndexKind,
    pub direction: Direction,
    pub best_value: IndexValue,
    /// Labelled graphs attaining the best value.
    pub best_count: u64,
    pub best_witnesses: Vec<CanonicalForm>,
    pub second_value: Option<IndexValue>,
    pub second_count: Option<u64>,
    pub second_witnesses: Vec<CanonicalForm>,
    /// Labelled class members examined.
    pub scan_size: u64,
}

impl ExtremalReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("class,n,index,direction,rank,value,labeled_count,witness\n");
        let rows = [
            (1, Some(&self.best_value), Some(self.best_count), &self.best_witnesses),
            (2, self.second_value.as_ref(), self.second_count, &self.second_witnesses),
        ];
        for (rank, value, count, witnesses) in rows {
            let (Some(value), Some(count)) = (value, count) else { continue };
            for w in witnesses {
                writeln!(
                    out,
                    "{},{},{},{},{rank},{value},{count},{w}",
                    self.class, self.n, self.index, self.direction
                )
                .unwrap();
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} n={} {} {}: scanned {} labelled graphs\n",
            self.class, self.n, self.index, self.direction, self.scan_size
        );
        let list = |ws: &[CanonicalForm]| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(
            out,
            "  best   {} ({} labelled, {} classes): {}",
            self.best_value,
            self.best_count,
            self.best_witnesses.len(),
            list(&self.best_witnesses)
        )
        .unwrap();
        match (&self.second_value, self.second_count) {
            (Some(v), Some(c)) => writeln!(
                out,
                "  second {v} ({c} labelled, {} classes): {}",
                self.second_witnesses.len(),
                list(&self.second_witnesses)
            )
            .unwrap(),
            _ => out.push_str("  second (none)\n"),
        }
        out
    }
}

/// Builds reports for several (index, direction) pairs from one summary,
/// sharing a single witness pass.
pub fn witness_reports(
    summary: &ClassSummary,
    requests: &[(IndexKind, Direction)],
    workers: usize,
) -> Result<Vec<ExtremalReport>> {
    let mut targets = Vec::new();
    for &(kind, dir) in requests {
        let r = summary.ranking(kind, dir);
        targets.push(r.best.target.clone());
        targets.push(r.second.as_ref().map_or(Target::Histograms(vec![]), |s| s.target.clone()));
    }
    let mut found = collect_witnesses(summary.class, summary.n, workers, &targets)?.into_iter();
    Ok(requests
        .iter()
        .map(|&(kind, direction)| {
            let r = summary.ranking(kind, direction);
            let best_witnesses = found.next().unwrap();
            let second_witnesses = found.next().unwrap();
            ExtremalReport {
                class: summary.class,
                n: summary.n,
                index: kind,
                direction,
                best_value: r.best.value.clone(),
                best_count: r.best.count,
                best_witnesses,
                second_value: r.second.as_ref().map(|s| s.value.clone()),
                second_count: r.second.as_ref().map(|s| s.count),
                second_witnesses,
                scan_size: summary.counts.members,
            }
        })
        .collect())
}

pub fn extremal_scan(
    class: GraphClass,
    n: usize,
    index: IndexKind,
    direction: Direction,
    workers: usize,
) -> Result<ExtremalReport> {
    let summary = scan_class(class, n, workers, false)?;
    Ok(witness_reports(&summary, &[(index, direction)], workers)?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bouquet, cycle};
    use crate::indices::index_bundle;

    #[test]
    fn eulerian_five_wiener_max() {
        let r = extremal_scan(GraphClass::Eulerian, 5, IndexKind::Wiener, Direction::Max, 1).unwrap();
        assert_eq!(r.best_value, IndexValue::from(15));
        assert_eq!(r.best_witnesses, vec![canonical_form_view(cycle(5).unwrap().view())]);
        assert_eq!(r.second_value, Some(IndexValue::from(14)));
        assert_eq!(r.second_witnesses, vec![canonical_form_view(bouquet(&[3, 3]).unwrap().view())]);
        // 5!/10 labelled 5-cycles.
        assert_eq!(r.best_count, 12);
    }

    #[test]
    fn witnesses_reproduce_their_values() {
        let s = scan_class(GraphClass::Eulerian, 7, 1, false).unwrap();
        let reqs: Vec<_> = IndexKind::ALL
            .iter()
            .flat_map(|&k| [(k, Direction::Min), (k, Direction::Max)])
            .collect();
        for r in witness_reports(&s, &reqs, 1).unwrap() {
            assert!(!r.best_witnesses.is_empty());
            for w in &r.best_witnesses {
                assert_eq!(index_bundle(&w.to_graph()).unwrap().get(r.index), r.best_value);
            }
            for w in &r.second_witnesses {
                assert_eq!(Some(index_bundle(&w.to_graph()).unwrap().get(r.index)), r.second_value);
            }
            let better = |a: &IndexValue, b: &IndexValue| match r.direction {
                Direction::Min => a < b,
                Direction::Max => a > b,
            };
            assert!(better(&r.best_value, r.second_value.as_ref().unwrap()));
        }
    }

    #[test]
    fn csv_has_header_and_rows() {
        let r = extremal_scan(GraphClass::Eulerian, 5, IndexKind::Wiener, Direction::Max, 1).unwrap();
        let csv = r.to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "class,n,index,direction,rank,value,labeled_count,witness");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("eulerian,5,wiener,max,1,15,12,"));
    }
}
