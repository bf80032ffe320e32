//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitmask per vertex.
//!
//! [`Graph`] is the owned, immutable value. The hot loops of the enumerator
//! never build a `Graph`; they hand out a borrowed [`GraphView`] over a row
//! buffer instead, and every algorithm here is written against the view.

mod classify;
mod distance;
pub mod edgelist;
pub mod graph6;
mod sequences;

pub use classify::{classify, ClassFlags, LowLink};
pub use distance::{distance_matrix, vertex_view, Distance, DistanceMatrix, VertexDistanceView, INFINITE};
pub(crate) use distance::bfs_layers;
pub use sequences::{dominated, majorizes};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline(always)]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
}

/// Borrowed adjacency rows: `rows[v]` is the neighbour mask of `v`.
#[derive(Clone, Copy)]
pub struct GraphView<'a> {
    rows: &'a [u64],
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        Ok(Graph { rows })
    }

    /// Builds a graph from neighbour masks, validating symmetry and the
    /// absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let w = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if row & bit(v) != 0 {
                return Err(Error::LoopEdge(v));
            }
            for w in Bits(row) {
                if rows[w] & bit(v) == 0 {
                    return Err(Error::SpecViolation(format!(
                        "adjacency not symmetric at ({v}, {w})"
                    )));
                }
            }
        }
        Ok(Graph { rows })
    }

    /// Unchecked constructor for rows produced by this crate's own builders.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { rows }
    }

    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { rows: vec![0; n] })
    }

    #[inline]
    pub fn view(&self) -> GraphView<'_> {
        GraphView { rows: &self.rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.view().size()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.view().degrees()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.view().has_edge(u, v)
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> {
        Bits(self.rows[v])
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, &row) in self.rows.iter().enumerate() {
            out.extend(Bits(row & !low_bits(u + 1)).map(|v| (u, v)));
        }
        out
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut rows = vec![0u64; self.order()];
        for (u, &row) in self.rows.iter().enumerate() {
            for v in Bits(row) {
                rows[perm[u]] |= bit(perm[v]);
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl<'a> GraphView<'a> {
    #[inline(always)]
    pub fn new(rows: &'a [u64]) -> Self {
        debug_assert!(rows.len() <= MAX_ORDER);
        GraphView { rows }
    }

    #[inline(always)]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline(always)]
    pub fn rows(&self) -> &'a [u64] {
        self.rows
    }

    #[inline(always)]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> u32 {
        self.rows[v].count_ones()
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// Connected and every degree equals 2.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.rows.iter().all(|r| r.count_ones() == 2) && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return false;
        }
        let all = low_bits(n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Upper-triangle bit string in graph6 column order, first pair most
    /// significant. Only defined for `n <= 11` (55 bits).
    #[inline]
    pub fn key(&self) -> u64 {
        let n = self.order();
        debug_assert!(n <= 11);
        let mut key = 0u64;
        for j in 1..n {
            key = (key << j) | reverse_low(self.rows[j] & low_bits(j), j);
        }
        key
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.to_vec())
    }
}

/// Reverses the lowest `width` bits, so that vertex 0 lands in the most
/// significant position of the column.
#[inline(always)]
pub(crate) fn reverse_low(x: u64, width: usize) -> u64 {
    if width == 0 {
        0
    } else {
        x.reverse_bits() >> (64 - width)
    }
}

/// Inverse of [`GraphView::key`].
pub fn graph_from_key(n: usize, key: u64) -> Graph {
    debug_assert!((1..=11).contains(&n));
    let mut rows = vec![0u64; n];
    let total = n * (n - 1) / 2;
    let mut consumed = 0;
    for j in 1..n {
        consumed += j;
        let col = reverse_low((key >> (total - consumed)) & low_bits(j), j);
        rows[j] |= col;
        for i in Bits(col) {
            rows[i] |= bit(j);
        }
    }
    Graph::from_rows_unchecked(rows)
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange { n, min: 1, max: MAX_ORDER })
    }
}
