//! Canonical labelling by branch and bound.
//!
//! Vertices are first split into cells by colour refinement seeded with the
//! degrees. Cells are ordered by their (isomorphism-invariant) refined
//! colour, and the search only considers labellings that place the cells in
//! that order. Among those it keeps the lexicographically smallest
//! upper-triangle bit string, comparing column prefixes as it goes and
//! trying only one vertex per class of interchangeable twins.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bit, graph6, graph_from_key, low_bits, Bits, Graph, GraphView};

pub const MAX_CANONICAL_ORDER: usize = 10;

/// Isomorphism-invariant encoding: the order and the minimal adjacency bit
/// string (graph6 column order, first pair most significant).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: u8,
    key: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn key(&self) -> u64 {
        self.key
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        graph_from_key(self.order(), self.key)
    }

    pub fn graph6(&self) -> String {
        graph6::encode(&self.to_graph()).expect("order <= 10")
    }

    /// The adjacency bit string, one byte per pair, `b'0'` or `b'1'`.
    pub fn bytes(&self) -> Vec<u8> {
        let total = self.order() * self.order().saturating_sub(1) / 2;
        (0..total).rev().map(|i| if self.key >> i & 1 == 1 { b'1' } else { b'0' }).collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.order() > MAX_CANONICAL_ORDER {
        return Err(Error::OrderTooLarge { n: g.order(), max: MAX_CANONICAL_ORDER });
    }
    Ok(canonical_form_view(g.view()))
}

pub(crate) fn canonical_form_view(g: GraphView<'_>) -> CanonicalForm {
    let n = g.order();
    debug_assert!(n <= MAX_CANONICAL_ORDER);
    let colors = refine(g);
    let mut search = Search::new(g, &colors, None);
    search.run();
    CanonicalForm { n: n as u8, key: search.best }
}

/// True iff `g`, as labelled, equals its own canonical representative.
/// Exactly one labelled graph per isomorphism class passes.
pub(crate) fn is_canonical(g: GraphView<'_>) -> bool {
    let rows = g.rows();
    // Refined cells refine the degree order, so labels must already be
    // sorted by degree.
    if rows.windows(2).any(|w| w[0].count_ones() > w[1].count_ones()) {
        return false;
    }
    let colors = refine(g);
    if colors[..rows.len()].windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    let mut search = Search::new(g, &colors, Some(g.key()));
    search.run();
    !search.found_smaller
}

/// Stable colour refinement from degrees. Colours are ranks of sorted
/// signatures, so they do not depend on the labelling.
fn refine(g: GraphView<'_>) -> [u8; 16] {
    let rows = g.rows();
    let n = rows.len();
    let mut colors = [0u8; 16];
    let mut sig = [(0u8, 0u64, 0usize); 16];
    let mut next = [0u8; 16];
    let mut classes = 0;

    for (v, c) in colors.iter_mut().enumerate().take(n) {
        *c = rows[v].count_ones() as u8;
    }
    loop {
        for v in 0..n {
            let mut counts = 0u64;
            for w in Bits(rows[v]) {
                counts += 1u64 << (4 * colors[w] as u32);
            }
            sig[v] = (colors[v], counts, v);
        }
        let s = &mut sig[..n];
        s.sort_unstable();
        let mut rank = 0u8;
        for i in 0..n {
            if i > 0 && (s[i].0, s[i].1) != (s[i - 1].0, s[i - 1].1) {
                rank += 1;
            }
            next[s[i].2] = rank;
        }
        let now = rank as usize + 1;
        colors[..n].copy_from_slice(&next[..n]);
        if now == classes {
            return colors;
        }
        classes = now;
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    total_bits: usize,
    colors: &'a [u8; 16],
    cell_at: [u8; 16],
    pos_of: [u8; 16],
    placed: u64,
    best: u64,
    have_best: bool,
    /// When set, look only for a labelling strictly below this key.
    target: Option<u64>,
    found_smaller: bool,
}

impl<'a> Search<'a> {
    fn new(g: GraphView<'a>, colors: &'a [u8; 16], target: Option<u64>) -> Self {
        let rows = g.rows();
        let n = rows.len();
        let mut cell_at = [0u8; 16];
        let mut sorted: Vec<u8> = colors[..n].to_vec();
        sorted.sort_unstable();
        cell_at[..n].copy_from_slice(&sorted);
        Search {
            rows,
            n,
            total_bits: n * n.saturating_sub(1) / 2,
            colors,
            cell_at,
            pos_of: [0; 16],
            placed: 0,
            best: target.unwrap_or(u64::MAX),
            have_best: target.is_some(),
            target,
            found_smaller: false,
        }
    }

    fn run(&mut self) {
        self.place(0, 0);
    }

    fn place(&mut self, k: usize, prefix: u64) {
        if k == self.n {
            if !self.have_best || prefix < self.best {
                self.best = prefix;
                self.have_best = true;
                if self.target.is_some() {
                    self.found_smaller = true;
                }
            }
            return;
        }
        let cell = self.cell_at[k];
        let mut candidates = 0u64;
        for v in Bits(low_bits(self.n) & !self.placed) {
            if self.colors[v] == cell {
                candidates |= bit(v);
            }
        }
        let bits_after = k * (k + 1) / 2;
        let mut tried = 0u64;
        for w in Bits(candidates) {
            if Bits(tried).any(|t| self.twins(t, w)) {
                continue;
            }
            tried |= bit(w);

            let mut col = 0u64;
            for x in Bits(self.rows[w] & self.placed) {
                col |= bit(k - 1 - self.pos_of[x] as usize);
            }
            let next = (prefix << k) | col;
            if self.have_best {
                let bound = self.best >> (self.total_bits - bits_after);
                if next > bound {
                    continue;
                }
            }
            self.pos_of[w] = k as u8;
            self.placed |= bit(w);
            self.place(k + 1, next);
            self.placed &= !bit(w);
            if self.found_smaller {
                return;
            }
        }
    }

    /// Swapping `a` and `b` is an automorphism fixing everything else.
    #[inline]
    fn twins(&self, a: usize, b: usize) -> bool {
        self.rows[a] & !bit(b) == self.rows[b] & !bit(a)
    }
}
