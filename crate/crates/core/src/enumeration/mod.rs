//! Exhaustive enumeration of labelled graphs in a class.
//!
//! Eulerian graphs come from the parity completion: every graph on the
//! vertices `1..n` extends to exactly one even graph on `0..n` by joining
//! vertex 0 to the odd-degree vertices, so walking the `2^C(n-1,2)` graphs
//! on `n - 1` vertices visits every labelled even graph once. The other
//! classes walk all `2^C(n,2)` labelled graphs, pruning branches in which
//! some vertex can no longer reach the class's minimum degree.
//!
//! The walk is split into independent partitions by the neighbourhood of
//! the highest base vertex (the last column of the adjacency word), so scans
//! can run partitions on any number of workers and merge the results.

mod canon;

pub use canon::{canonical_form, CanonicalForm, MAX_CANONICAL_ORDER};
pub(crate) use canon::{canonical_form_view, is_canonical};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, GraphView, LowLink};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Eulerian,
    TwoEdgeConnected,
    TwoConnected,
    Connected,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Eulerian => "eulerian",
            GraphClass::TwoEdgeConnected => "two_edge_connected",
            GraphClass::TwoConnected => "two_connected",
            GraphClass::Connected => "connected",
        }
    }

    /// Largest order the enumerator accepts for this class.
    pub fn max_order(self) -> usize {
        match self {
            GraphClass::Eulerian => 10,
            _ => 8,
        }
    }

    fn min_degree(self) -> u32 {
        match self {
            GraphClass::Eulerian => 0,
            GraphClass::Connected => 1,
            GraphClass::TwoEdgeConnected | GraphClass::TwoConnected => 2,
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eulerian" => Ok(GraphClass::Eulerian),
            "two_edge_connected" | "2ec" | "twoec" => Ok(GraphClass::TwoEdgeConnected),
            "two_connected" | "2c" => Ok(GraphClass::TwoConnected),
            "connected" => Ok(GraphClass::Connected),
            _ => Err(Error::Parse(format!("unknown graph class {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub class: GraphClass,
    pub dedupe: bool,
}

impl EnumSpec {
    pub fn new(n: usize, class: GraphClass) -> Self {
        EnumSpec { n, class, dedupe: false }
    }

    pub fn deduped(self) -> Self {
        EnumSpec { dedupe: true, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let max = self.class.max_order();
        if (3..=max).contains(&self.n) {
            Ok(())
        } else {
            Err(Error::SpecViolation(format!(
                "{} enumeration needs 3 <= n <= {max}, got {}",
                self.class, self.n
            )))
        }
    }
}

/// A class member handed to visitors, with the low-link data when the
/// class test computed it.
#[derive(Clone, Copy)]
pub struct Member<'a> {
    pub graph: GraphView<'a>,
    pub low_link: Option<LowLink>,
}

impl Member<'_> {
    /// 2-connectivity, if known without further work.
    pub fn two_connected(&self) -> Option<bool> {
        self.low_link.map(|ll| ll.connected && ll.cut_vertices == 0 && self.graph.order() >= 3)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WalkCounts {
    /// Labelled graphs reaching the class test. For the Eulerian class this
    /// is every graph on `n - 1` vertices; for the others, every graph that
    /// survives degree pruning.
    pub candidates: u64,
    /// Labelled graphs that passed the class test (and dedupe, if set).
    pub members: u64,
}

impl std::ops::Add for WalkCounts {
    type Output = WalkCounts;
    fn add(self, o: WalkCounts) -> WalkCounts {
        WalkCounts { candidates: self.candidates + o.candidates, members: self.members + o.members }
    }
}

#[derive(Clone, Debug)]
pub struct Enumerator {
    spec: EnumSpec,
    base: usize,
}

impl Enumerator {
    pub fn new(spec: EnumSpec) -> Result<Self> {
        spec.validate()?;
        let base = match spec.class {
            GraphClass::Eulerian => spec.n - 1,
            _ => spec.n,
        };
        Ok(Enumerator { spec, base })
    }

    pub fn spec(&self) -> EnumSpec {
        self.spec
    }

    pub fn partitions(&self) -> usize {
        1 << (self.base - 1)
    }

    /// Walks one partition, calling `visit` for each class member.
    pub fn run_partition(&self, partition: usize, mut visit: impl FnMut(Member<'_>)) -> WalkCounts {
        assert!(partition < self.partitions());
        let mut counts = WalkCounts::default();
        let spec = self.spec;
        let mut full = [0u64; 16];
        let n = spec.n;

        let mut leaf = |base: &[u64]| {
            counts.candidates += 1;
            let member = match spec.class {
                GraphClass::Eulerian => {
                    let mut odd = 0u64;
                    for (v, &row) in base.iter().enumerate() {
                        odd |= ((row.count_ones() & 1) as u64) << v;
                        full[v + 1] = (row << 1) | (odd >> v & 1);
                    }
                    full[0] = odd << 1;
                    let g = GraphView::new(&full[..n]);
                    if !g.is_connected() {
                        return;
                    }
                    Member { graph: g, low_link: None }
                }
                GraphClass::Connected => {
                    let g = GraphView::new(base);
                    if !g.is_connected() {
                        return;
                    }
                    Member { graph: g, low_link: None }
                }
                GraphClass::TwoEdgeConnected | GraphClass::TwoConnected => {
                    let g = GraphView::new(base);
                    let ll = LowLink::compute(g);
                    let ok = ll.connected
                        && if spec.class == GraphClass::TwoEdgeConnected {
                            ll.bridges == 0
                        } else {
                            ll.cut_vertices == 0
                        };
                    if !ok {
                        return;
                    }
                    Member { graph: g, low_link: Some(ll) }
                }
            };
            if spec.dedupe && !is_canonical(member.graph) {
                return;
            }
            counts.members += 1;
            visit(member);
        };

        let mut walk = Walk {
            rows: [0u64; 16],
            base: self.base,
            min_degree: spec.class.min_degree(),
            leaf: &mut leaf,
        };
        let last = self.base - 1;
        walk.rows[last] = partition as u64;
        for v in crate::graph::Bits(partition as u64) {
            walk.rows[v] |= bit(last);
        }
        walk.column(1);
        counts
    }

    /// Folds every class member into per-partition accumulators and merges
    /// them. `merge` must be associative and commutative.
    pub fn scan<A, I, V, M>(&self, workers: usize, init: I, visit: V, merge: M) -> (A, WalkCounts)
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        V: Fn(&mut A, Member<'_>) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..self.partitions())
                .into_par_iter()
                .map(|p| {
                    let mut acc = init();
                    let counts = self.run_partition(p, |m| visit(&mut acc, m));
                    (acc, counts)
                })
                .reduce(
                    || (init(), WalkCounts::default()),
                    |(a, ca), (b, cb)| (merge(a, b), ca + cb),
                )
        })
    }

    /// All members, sorted by adjacency key so the order is independent of
    /// the worker count.
    pub fn collect(&self, workers: usize) -> (Vec<Graph>, WalkCounts) {
        let (mut keys, counts) = self.scan(
            workers,
            Vec::new,
            |acc: &mut Vec<u64>, m| acc.push(m.graph.key()),
            |mut a, mut b| {
                a.append(&mut b);
                a
            },
        );
        keys.sort_unstable();
        let graphs = keys.into_iter().map(|k| crate::graph::graph_from_key(self.spec.n, k)).collect();
        (graphs, counts)
    }
}

pub fn enumerate(spec: EnumSpec, workers: usize) -> Result<Vec<Graph>> {
    Ok(Enumerator::new(spec)?.collect(workers).0)
}

/// `WORKERS` from the environment, else the available parallelism.
pub fn workers_from_env() -> Result<usize> {
    match std::env::var("WORKERS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(w) if w > 0 => Ok(w),
            _ => Err(Error::Parse(format!("WORKERS must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

/// Connected and 2-regular.
pub fn is_isomorphic_to_cycle(g: &Graph) -> bool {
    g.view().is_cycle()
}

/// Column-by-column walk over labelled graphs on `base` vertices. Column
/// `j` holds the edges from `j` to lower vertices; each column is stepped in
/// Gray-code order so each step toggles a single edge.
struct Walk<'a, F: FnMut(&[u64])> {
    rows: [u64; 16],
    base: usize,
    min_degree: u32,
    leaf: &'a mut F,
}

impl<F: FnMut(&[u64])> Walk<'_, F> {
    fn column(&mut self, j: usize) {
        if j + 1 >= self.base {
            self.finish();
            return;
        }
        if self.min_degree > 0 {
            // Vertices below j can still gain one edge from each of the
            // columns j..base-1 not yet chosen.
            let slack = (self.base - 1 - j) as u32;
            if self.rows[..j].iter().any(|r| r.count_ones() + slack < self.min_degree) {
                return;
            }
        }
        self.column(j + 1);
        for step in 1u64..(1 << j) {
            let i = step.trailing_zeros() as usize;
            self.rows[i] ^= bit(j);
            self.rows[j] ^= bit(i);
            self.column(j + 1);
        }
        // The last Gray code of width j is 1 << (j - 1).
        self.rows[j - 1] ^= bit(j);
        self.rows[j] ^= bit(j - 1);
    }

    #[inline(always)]
    fn finish(&mut self) {
        let rows = &self.rows[..self.base];
        if self.min_degree > 0 && rows.iter().any(|r| r.count_ones() < self.min_degree) {
            return;
        }
        (self.leaf)(rows);
    }
}
