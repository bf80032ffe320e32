//! Per-partition accumulators for exhaustive class scans.
//!
//! Everything here works on raw adjacency rows and machine integers. The
//! Harary index is carried as `H * L` with `L = lcm(1..n-1)`, which is an
//! integer for every graph of order `n`, so comparisons stay exact. Indices
//! that only depend on the degree sequence are gathered per degree
//! histogram and evaluated with big integers after the merge.

use std::collections::HashMap;

use crate::enumeration::Member;
use crate::graph::bit;
use crate::indices::{degree_histogram, m2_of_rows};

use super::Direction;

/// Largest order the scan arithmetic supports.
pub(crate) const MAX_SCAN_ORDER: usize = 12;

/// `L / d` for each distance `d`, with `L = lcm(1..n-1)`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Scales {
    pub lcm: u64,
    pub per_distance: [u64; 16],
}

impl Scales {
    pub fn new(n: usize) -> Self {
        assert!((2..=MAX_SCAN_ORDER).contains(&n));
        let lcm = (1..n as u64).fold(1u64, num_integer::lcm);
        let mut per_distance = [0u64; 16];
        for (d, s) in per_distance.iter_mut().enumerate().skip(1).take(n - 1) {
            *s = lcm / d as u64;
        }
        Scales { lcm, per_distance }
    }
}

/// Everything a scan needs to know about one labelled graph.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Fingerprint {
    pub wiener: u64,
    pub harary_scaled: u64,
    pub m1: u64,
    pub m2: u64,
    pub size: u32,
    pub histogram: u64,
    pub is_cycle: bool,
    pub regular: bool,
}

/// Outcome of the per-vertex distance checks on a 2-connected graph.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct VertexChecks {
    /// Some vertex's sorted distances exceed the cycle's pointwise.
    pub not_dominated: bool,
    /// Some vertex has a single vertex at a distance below its eccentricity.
    pub thin_layer: bool,
    /// Some vertex has `sum 1/d < (2/n) H(C_n)`.
    pub below_threshold: bool,
}

/// Wiener, scaled Harary and (optionally) per-vertex checks from one BFS
/// per vertex. The graph must be connected.
#[inline]
pub(crate) fn distance_pass(
    rows: &[u64],
    scales: &Scales,
    vertex_threshold: Option<u64>,
) -> (u64, u64, VertexChecks) {
    let n = rows.len();
    let mut counts = [0u32; 16];
    let mut checks = VertexChecks::default();
    for s in 0..n {
        let mut seen = bit(s);
        let mut frontier = seen;
        let mut depth = 0usize;
        let mut reached = 0u32;
        let mut prev_layer = u32::MAX;
        let mut vertex_sum = 0u64;
        loop {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                next |= rows[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & !seen;
            if frontier == 0 {
                break;
            }
            seen |= frontier;
            depth += 1;
            let c = frontier.count_ones();
            counts[depth] += c;
            if vertex_threshold.is_some() {
                reached += c;
                if (reached as usize) < (2 * depth).min(n - 1) {
                    checks.not_dominated = true;
                }
                if prev_layer < 2 {
                    checks.thin_layer = true;
                }
                prev_layer = c;
                vertex_sum += c as u64 * scales.per_distance[depth];
            }
        }
        if let Some(threshold) = vertex_threshold {
            if n as u64 * vertex_sum < threshold {
                checks.below_threshold = true;
            }
        }
    }
    let mut wiener = 0u64;
    let mut harary = 0u64;
    for (d, &c) in counts.iter().enumerate().take(n).skip(1) {
        wiener += d as u64 * c as u64;
        harary += c as u64 * scales.per_distance[d];
    }
    (wiener / 2, harary / 2, checks)
}

pub(crate) fn fingerprint(rows: &[u64], scales: &Scales) -> Fingerprint {
    let (wiener, harary_scaled, _) = distance_pass(rows, scales, None);
    degree_part(rows, wiener, harary_scaled)
}

#[inline]
fn degree_part(rows: &[u64], wiener: u64, harary_scaled: u64) -> Fingerprint {
    let n = rows.len();
    let mut m1 = 0u64;
    let mut twice_m = 0u32;
    let d0 = rows[0].count_ones();
    let mut regular = true;
    for r in rows {
        let d = r.count_ones();
        m1 += (d * d) as u64;
        twice_m += d;
        regular &= d == d0;
    }
    let histogram = degree_histogram(rows);
    Fingerprint {
        wiener,
        harary_scaled,
        m1,
        m2: m2_of_rows(rows),
        size: twice_m / 2,
        histogram,
        is_cycle: histogram == (n as u64) << 8,
        regular,
    }
}

/// Count and least adjacency key of the graphs sharing one value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Slot {
    pub value: u64,
    pub count: u64,
    pub non_cycle: u64,
    pub example: u64,
    pub non_cycle_example: u64,
}

impl Slot {
    fn new(value: u64, key: u64, is_cycle: bool) -> Self {
        Slot {
            value,
            count: 1,
            non_cycle: !is_cycle as u64,
            example: key,
            non_cycle_example: if is_cycle { u64::MAX } else { key },
        }
    }

    fn absorb(&mut self, key: u64, is_cycle: bool) {
        self.count += 1;
        self.example = self.example.min(key);
        if !is_cycle {
            self.non_cycle += 1;
            self.non_cycle_example = self.non_cycle_example.min(key);
        }
    }

    fn combine(&mut self, o: &Slot) {
        debug_assert_eq!(self.value, o.value);
        self.count += o.count;
        self.non_cycle += o.non_cycle;
        self.example = self.example.min(o.example);
        self.non_cycle_example = self.non_cycle_example.min(o.non_cycle_example);
    }
}

/// The two best distinct values seen so far in one direction.
#[derive(Clone, Copy, Debug)]
pub(crate) struct TopTwo {
    pub direction: Direction,
    pub slots: [Option<Slot>; 2],
}

impl TopTwo {
    pub fn new(direction: Direction) -> Self {
        TopTwo { direction, slots: [None, None] }
    }

    #[inline(always)]
    fn better(&self, a: u64, b: u64) -> bool {
        match self.direction {
            Direction::Min => a < b,
            Direction::Max => a > b,
        }
    }

    #[inline(always)]
    pub fn offer(&mut self, value: u64, is_cycle: bool, key: impl FnOnce() -> u64) {
        if let Some(s) = &self.slots[1] {
            if self.better(s.value, value) {
                return;
            }
        }
        self.insert(Slot::new(value, key(), is_cycle));
    }

    fn insert(&mut self, slot: Slot) {
        let this = *self;
        for i in 0..2 {
            match &mut self.slots[i] {
                Some(s) if s.value == slot.value => {
                    s.combine(&slot);
                    return;
                }
                Some(s) if this.better(s.value, slot.value) => continue,
                _ => {
                    if i == 0 {
                        self.slots[1] = self.slots[0];
                    }
                    self.slots[i] = Some(slot);
                    return;
                }
            }
        }
    }

    pub fn merge(mut self, other: TopTwo) -> TopTwo {
        for s in other.slots.into_iter().flatten() {
            self.insert(s);
        }
        self
    }
}

/// Count and least key of the graphs failing some check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Violations {
    pub count: u64,
    pub example: Option<u64>,
}

impl Violations {
    #[inline]
    pub fn record(&mut self, key: u64) {
        self.count += 1;
        self.example = Some(self.example.map_or(key, |e| e.min(key)));
    }

    pub fn merge(self, o: Violations) -> Violations {
        Violations {
            count: self.count + o.count,
            example: match (self.example, o.example) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }
}

/// What a class scan tracks beyond the index trackers.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ScanOptions {
    pub scales: Scales,
    /// `2 * L * H(C_n)`; when set, 2-connected members get the per-vertex
    /// distance checks.
    pub vertex_threshold: Option<u64>,
}

#[derive(Clone, Debug)]
pub(crate) struct ClassStats {
    pub wiener: [TopTwo; 2],
    pub harary: [TopTwo; 2],
    pub m2: [TopTwo; 2],
    pub histograms: HashMap<u64, Slot>,
    /// Least `(size, key)` over non-cycle members.
    pub non_cycle_min_size: Option<(u32, u64)>,
    pub cauchy_schwarz: Violations,
    pub two_connected: u64,
    pub not_dominated: Violations,
    pub thin_layer: Violations,
    pub below_threshold: Violations,
}

impl ClassStats {
    pub fn new() -> Self {
        let pair = [TopTwo::new(Direction::Min), TopTwo::new(Direction::Max)];
        ClassStats {
            wiener: pair,
            harary: pair,
            m2: pair,
            histograms: HashMap::new(),
            non_cycle_min_size: None,
            cauchy_schwarz: Violations::default(),
            two_connected: 0,
            not_dominated: Violations::default(),
            thin_layer: Violations::default(),
            below_threshold: Violations::default(),
        }
    }

    #[inline]
    pub fn visit(&mut self, m: Member<'_>, opts: &ScanOptions) {
        let g = m.graph;
        let rows = g.rows();
        let vertex_threshold = match m.two_connected() {
            Some(true) => opts.vertex_threshold,
            _ => None,
        };
        let (wiener, harary_scaled, checks) = distance_pass(rows, &opts.scales, vertex_threshold);
        let fp = degree_part(rows, wiener, harary_scaled);
        let key = || g.key();

        for t in &mut self.wiener {
            t.offer(fp.wiener, fp.is_cycle, key);
        }
        for t in &mut self.harary {
            t.offer(fp.harary_scaled, fp.is_cycle, key);
        }
        for t in &mut self.m2 {
            t.offer(fp.m2, fp.is_cycle, key);
        }
        let k = key();
        self.histograms
            .entry(fp.histogram)
            .and_modify(|s| s.absorb(k, fp.is_cycle))
            .or_insert_with(|| Slot::new(fp.histogram, k, fp.is_cycle));

        if !fp.is_cycle {
            let cand = (fp.size, k);
            if self.non_cycle_min_size.is_none_or(|cur| cand < cur) {
                self.non_cycle_min_size = Some(cand);
            }
        }
        let n = rows.len() as u64;
        let lhs = n * fp.m1;
        let rhs = 4 * (fp.size as u64) * (fp.size as u64);
        if lhs < rhs || (lhs == rhs) != fp.regular {
            self.cauchy_schwarz.record(k);
        }
        if vertex_threshold.is_some() {
            self.two_connected += 1;
            if checks.not_dominated {
                self.not_dominated.record(k);
            }
            if checks.thin_layer {
                self.thin_layer.record(k);
            }
            if checks.below_threshold {
                self.below_threshold.record(k);
            }
        }
    }

    pub fn merge(mut self, o: ClassStats) -> ClassStats {
        for i in 0..2 {
            self.wiener[i] = self.wiener[i].merge(o.wiener[i]);
            self.harary[i] = self.harary[i].merge(o.harary[i]);
            self.m2[i] = self.m2[i].merge(o.m2[i]);
        }
        for (h, s) in o.histograms {
            self.histograms.entry(h).and_modify(|mine| mine.combine(&s)).or_insert(s);
        }
        self.non_cycle_min_size = match (self.non_cycle_min_size, o.non_cycle_min_size) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.cauchy_schwarz = self.cauchy_schwarz.merge(o.cauchy_schwarz);
        self.two_connected += o.two_connected;
        self.not_dominated = self.not_dominated.merge(o.not_dominated);
        self.thin_layer = self.thin_layer.merge(o.thin_layer);
        self.below_threshold = self.below_threshold.merge(o.below_threshold);
        self
    }
}
