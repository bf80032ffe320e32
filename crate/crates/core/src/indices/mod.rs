//! Exact topological indices: Wiener, Harary, the two Zagreb indices and
//! their multiplicative variants.
//!
//! Distance-based indices reject disconnected graphs. Degree-based ones are
//! defined for any graph, with `0^0 = 1` in the second multiplicative index.

mod profile;
mod rational;

pub use profile::DistanceProfile;
pub use rational::Rational;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bfs_layers, low_bits, Bits, Graph};

/// The six indices of one connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexBundle {
    pub wiener: u64,
    pub harary: Rational,
    pub m1: u64,
    pub m2: u64,
    #[serde(serialize_with = "display")]
    pub pi1: BigUint,
    #[serde(serialize_with = "display")]
    pub pi2: BigUint,
}

/// Degree-based part of [`IndexBundle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zagreb {
    pub m1: u64,
    pub m2: u64,
    pub pi1: BigUint,
    pub pi2: BigUint,
}

fn display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexKind {
    Wiener,
    Harary,
    M1,
    M2,
    Pi1,
    Pi2,
}

impl IndexKind {
    pub const ALL: [IndexKind; 6] = [
        IndexKind::Wiener,
        IndexKind::Harary,
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::Pi1,
        IndexKind::Pi2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Wiener => "wiener",
            IndexKind::Harary => "harary",
            IndexKind::M1 => "m1",
            IndexKind::M2 => "m2",
            IndexKind::Pi1 => "pi1",
            IndexKind::Pi2 => "pi2",
        }
    }

    /// Whether the value depends only on the degree sequence.
    pub fn is_degree_sequence_index(self) -> bool {
        matches!(self, IndexKind::M1 | IndexKind::Pi1 | IndexKind::Pi2)
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for IndexKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown index {s:?}")))
    }
}

/// An exact index value: a whole number, or a fraction for Harary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IndexValue {
    Integer(BigUint),
    Fraction(Rational),
}

impl IndexValue {
    pub fn as_rational(&self) -> Rational {
        match self {
            IndexValue::Integer(v) => Rational::from_integer(v.clone()),
            IndexValue::Fraction(r) => r.clone(),
        }
    }
}

impl Ord for IndexValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (IndexValue::Integer(a), IndexValue::Integer(b)) => a.cmp(b),
            _ => self.as_rational().cmp(&other.as_rational()),
        }
    }
}

impl PartialOrd for IndexValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Integer(v) => write!(f, "{v}"),
            IndexValue::Fraction(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<u64> for IndexValue {
    fn from(v: u64) -> Self {
        IndexValue::Integer(v.into())
    }
}

impl IndexBundle {
    pub fn get(&self, kind: IndexKind) -> IndexValue {
        match kind {
            IndexKind::Wiener => self.wiener.into(),
            IndexKind::Harary => IndexValue::Fraction(self.harary.clone()),
            IndexKind::M1 => self.m1.into(),
            IndexKind::M2 => self.m2.into(),
            IndexKind::Pi1 => IndexValue::Integer(self.pi1.clone()),
            IndexKind::Pi2 => IndexValue::Integer(self.pi2.clone()),
        }
    }
}

/// All unordered pair distances of a connected graph.
pub fn distance_profile(g: &Graph) -> Result<DistanceProfile> {
    let n = g.order();
    let mut counts = vec![0u64; n];
    for s in 0..n {
        let reached = bfs_layers(g.rows(), s, |d, layer| counts[d as usize] += layer.count_ones() as u64);
        if reached != low_bits(n) {
            return Err(Error::DisconnectedGraph);
        }
    }
    // Every pair was seen from both ends.
    Ok(DistanceProfile::from_counts(
        counts.into_iter().enumerate().skip(1).map(|(d, c)| (d as u32, c / 2)),
    ))
}

pub fn wiener(g: &Graph) -> Result<u64> {
    distance_profile(g).map(|p| p.wiener())
}

pub fn harary(g: &Graph) -> Result<Rational> {
    distance_profile(g).map(|p| p.reciprocal_sum())
}

/// `(wiener, harary)` read off a profile.
pub fn profile_indices(p: &DistanceProfile) -> (u64, Rational) {
    (p.wiener(), p.reciprocal_sum())
}

pub fn zagreb(g: &Graph) -> Zagreb {
    let deg = g.degrees();
    let m1 = deg.iter().map(|&d| (d * d) as u64).sum();
    let m2 = g.edges().iter().map(|&(u, v)| (deg[u] * deg[v]) as u64).sum();
    let pi1 = deg.iter().map(|&d| BigUint::from(d)).product();
    pi2_of_degrees(&deg, m1, m2, pi1)
}

fn pi2_of_degrees(deg: &[usize], m1: u64, m2: u64, pi1: BigUint) -> Zagreb {
    let pi2 = deg
        .iter()
        .filter(|&&d| d > 0)
        .fold(BigUint::one(), |acc, &d| acc * Pow::pow(BigUint::from(d), d as u32));
    Zagreb { m1, m2, pi1, pi2 }
}

/// Every index of a connected graph.
pub fn index_bundle(g: &Graph) -> Result<IndexBundle> {
    let (wiener, harary) = profile_indices(&distance_profile(g)?);
    let Zagreb { m1, m2, pi1, pi2 } = zagreb(g);
    Ok(IndexBundle { wiener, harary, m1, m2, pi1, pi2 })
}

/// Distance profile of the cycle `C_n`.
pub fn cycle_profile(n: usize) -> Result<DistanceProfile> {
    check_cycle_order(n)?;
    let n64 = n as u64;
    let half = (n / 2) as u32;
    Ok(if n % 2 == 1 {
        DistanceProfile::from_counts((1..=half).map(|d| (d, n64)))
    } else {
        DistanceProfile::from_counts((1..half).map(|d| (d, n64)).chain([(half, n64 / 2)]))
    })
}

/// Indices of `C_n` from closed forms, without building the graph.
pub fn cycle_closed_forms(n: usize) -> Result<IndexBundle> {
    check_cycle_order(n)?;
    let n64 = n as u64;
    let (wiener, harary) = if n.is_multiple_of(2) {
        let k = n64 / 2;
        (n64 * n64 * n64 / 8, Rational::harmonic(k - 1).scale(n64, 1) + Rational::from(1))
    } else {
        (n64 * (n64 * n64 - 1) / 8, Rational::harmonic((n64 - 1) / 2).scale(n64, 1))
    };
    Ok(IndexBundle {
        wiener,
        harary,
        m1: 4 * n64,
        m2: 4 * n64,
        pi1: Pow::pow(BigUint::from(2u32), n as u32),
        pi2: Pow::pow(BigUint::from(4u32), n as u32),
    })
}

/// Largest order accepted by the cycle formulas. They never build the
/// graph, so this is independent of the graph order limit.
pub const MAX_CYCLE_FORMULA_ORDER: usize = 1 << 20;

fn check_cycle_order(n: usize) -> Result<()> {
    if (3..=MAX_CYCLE_FORMULA_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange { n, min: 3, max: MAX_CYCLE_FORMULA_ORDER })
    }
}

/// Degree sequence packed as a histogram: four bits per degree value
/// `0..=15`. Only valid for `n <= 15`.
#[inline(always)]
pub(crate) fn degree_histogram(rows: &[u64]) -> u64 {
    debug_assert!(rows.len() <= 15);
    rows.iter().fold(0u64, |h, r| h + (1u64 << (4 * r.count_ones())))
}

/// Degrees (descending) encoded by [`degree_histogram`].
pub(crate) fn histogram_degrees(hist: u64) -> Vec<usize> {
    let mut out = Vec::new();
    for d in (0..16).rev() {
        let c = (hist >> (4 * d)) & 0xf;
        out.extend(std::iter::repeat_n(d, c as usize));
    }
    out
}

/// `(m1, pi1, pi2)` of a degree sequence.
pub(crate) fn degree_sequence_indices(deg: &[usize]) -> (u64, BigUint, BigUint) {
    let m1 = deg.iter().map(|&d| (d * d) as u64).sum();
    let pi1: BigUint = deg.iter().map(|&d| BigUint::from(d)).product();
    let z = pi2_of_degrees(deg, m1, 0, pi1);
    (z.m1, z.pi1, z.pi2)
}

/// Sum over edges of `deg(u) * deg(v)`, on raw rows.
#[inline(always)]
pub(crate) fn m2_of_rows(rows: &[u64]) -> u64 {
    let mut total = 0u64;
    for (u, &row) in rows.iter().enumerate() {
        let du = row.count_ones() as u64;
        for v in Bits(row & !low_bits(u + 1)) {
            total += du * rows[v].count_ones() as u64;
        }
    }
    total
}
