//! Builders for the named graph families: cycles, paths, complete graphs,
//! `K_n` minus a perfect matching, cycle bouquets, and the gadgets `h`,
//! `G1(n)`, `G2(n)` used in the Harary comparison.
//!
//! Numbering is deterministic. Amalgamation keeps the first graph's ids and
//! appends the second graph's remaining vertices in increasing order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{distance_matrix, Graph, MAX_ORDER};

/// A named family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteMinusMatching(usize),
    Bouquet(Vec<usize>),
    G1(usize),
    G2(usize),
    H,
}

/// Ids of the `h` gadget's vertices: `v_i` is vertex `i - 1`.
pub mod h_labels {
    /// `v1`, glued onto the big cycle in `G2`.
    pub const ATTACH: usize = 0;
    /// `v3`, antipodal to the shared vertex in the second square.
    pub const FAR: usize = 2;
    /// `v6`, the vertex both squares share.
    pub const SHARED: usize = 5;
}

/// Smallest order for which `G1(n)` and `G2(n)` are built.
pub const G_PAIR_MIN_ORDER: usize = 10;

impl FamilySpec {
    /// Parses a kind name plus the numeric parameters the CLI collects.
    pub fn parse(kind: &str, n: Option<usize>, lengths: &[usize]) -> Result<Self> {
        let need = || n.ok_or_else(|| Error::SpecViolation(format!("family {kind:?} needs an order")));
        Ok(match kind {
            "cycle" => FamilySpec::Cycle(need()?),
            "path" => FamilySpec::Path(need()?),
            "complete" => FamilySpec::Complete(need()?),
            "complete_minus_matching" => FamilySpec::CompleteMinusMatching(need()?),
            "bouquet" => FamilySpec::Bouquet(lengths.to_vec()),
            "g1" => FamilySpec::G1(need()?),
            "g2" => FamilySpec::G2(need()?),
            "h" => FamilySpec::H,
            other => return Err(Error::SpecViolation(format!("unknown family {other:?}"))),
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Path(_) => "path",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteMinusMatching(_) => "complete_minus_matching",
            FamilySpec::Bouquet(_) => "bouquet",
            FamilySpec::G1(_) => "g1",
            FamilySpec::G2(_) => "g2",
            FamilySpec::H => "h",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Bouquet(l) => write!(f, "bouquet{l:?}"),
            FamilySpec::H => f.write_str("h"),
            FamilySpec::Cycle(n)
            | FamilySpec::Path(n)
            | FamilySpec::Complete(n)
            | FamilySpec::CompleteMinusMatching(n)
            | FamilySpec::G1(n)
            | FamilySpec::G2(n) => write!(f, "{}({n})", self.kind()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `kind`, `kind:n`, or `bouquet:a,b,...`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        let nums = arg
            .split(',')
            .filter(|t| !t.is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::parse(kind, nums.first().copied(), &nums)
    }
}

fn violation(msg: String) -> Error {
    Error::SpecViolation(msg)
}

fn check_range(what: &str, n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_ORDER {
        Err(violation(format!("{what} needs {min} <= n <= {MAX_ORDER}, got {n}")))
    } else {
        Ok(())
    }
}

pub fn build(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Cycle(n) => cycle(n),
        FamilySpec::Path(n) => path(n),
        FamilySpec::Complete(n) => complete(n),
        FamilySpec::CompleteMinusMatching(n) => complete_minus_matching(n),
        FamilySpec::Bouquet(ref lengths) => bouquet(lengths),
        FamilySpec::G1(n) => g_pair(n).map(|p| p.g1),
        FamilySpec::G2(n) => g_pair(n).map(|p| p.g2),
        FamilySpec::H => Ok(h_gadget()),
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    check_range("cycle", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    check_range("path", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    check_range("complete", n, 1)?;
    let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Graph::from_edge_list(n, &edges)
}

/// `K_n` without the edges `{2i, 2i+1}`.
pub fn complete_minus_matching(n: usize) -> Result<Graph> {
    check_range("complete_minus_matching", n, 4)?;
    if !n.is_multiple_of(2) {
        return Err(violation(format!("complete_minus_matching needs even n, got {n}")));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| !(i % 2 == 0 && j == i + 1))
        .collect();
    Graph::from_edge_list(n, &edges)
}

/// Cycles of the given lengths sharing vertex 0.
pub fn bouquet(lengths: &[usize]) -> Result<Graph> {
    if lengths.is_empty() {
        return Err(violation("bouquet needs at least one cycle".into()));
    }
    if let Some(&l) = lengths.iter().find(|&&l| l < 3) {
        return Err(violation(format!("bouquet cycle lengths must be >= 3, got {l}")));
    }
    let mut g = cycle(lengths[0])?;
    for &l in &lengths[1..] {
        g = amalgamate(&g, 0, &cycle(l)?, 0)?;
    }
    Ok(g)
}

/// Two 4-cycles sharing `v6`; `v1` and `v3` sit opposite the shared vertex
/// in their squares, so `d(v1, v3) = 4`.
pub fn h_gadget() -> Graph {
    // v1..v7 -> 0..6
    let e = |a: usize, b: usize| (a - 1, b - 1);
    Graph::from_edge_list(
        7,
        &[e(1, 2), e(2, 6), e(6, 7), e(7, 1), e(6, 4), e(4, 3), e(3, 5), e(5, 6)],
    )
    .expect("fixed gadget")
}

/// Identifies vertex `u` of `g` with vertex `v` of `h`.
pub fn amalgamate(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Graph> {
    if u >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.order() });
    }
    if v >= h.order() {
        return Err(Error::VertexOutOfRange { vertex: v, n: h.order() });
    }
    let n = g.order() + h.order() - 1;
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange { n, min: 1, max: MAX_ORDER });
    }
    let offset = g.order();
    let id = |w: usize| match w.cmp(&v) {
        std::cmp::Ordering::Equal => u,
        std::cmp::Ordering::Less => offset + w,
        std::cmp::Ordering::Greater => offset + w - 1,
    };
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(a, b)| (id(a), id(b))));
    Graph::from_edge_list(n, &edges)
}

/// `G1(n)` and `G2(n)` with matching gadget labels.
#[derive(Clone, Debug)]
pub struct GPair {
    pub n: usize,
    pub g1: Graph,
    pub g2: Graph,
    /// Ids of the big cycle `C_{n-6}`; vertex 0 is the glued vertex.
    pub big_cycle: std::ops::Range<usize>,
    /// `gadget[i]` is the id of `v_{i+1}` in both graphs.
    pub gadget: [usize; 7],
}

pub fn g_pair(n: usize) -> Result<GPair> {
    if !(G_PAIR_MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(violation(format!(
            "g1/g2 need {G_PAIR_MIN_ORDER} <= n <= {MAX_ORDER}, got {n}"
        )));
    }
    let big = cycle(n - 6)?;
    let g1 = amalgamate(&big, 0, &cycle(7)?, 0)?;
    let g2 = amalgamate(&big, 0, &h_gadget(), h_labels::ATTACH)?;
    let mut gadget = [0usize; 7];
    for (i, slot) in gadget.iter_mut().enumerate().skip(1) {
        *slot = n - 6 + i - 1;
    }
    let pair = GPair { n, g1, g2, big_cycle: 0..n - 6, gadget };
    pair.check_distance_shift()?;
    Ok(pair)
}

impl GPair {
    /// For every big-cycle vertex `u`: `d_G2(u, v3) = d_G1(u, v3) + 2`, and
    /// all other gadget vertices are at equal distance in both graphs.
    pub fn check_distance_shift(&self) -> Result<()> {
        let d1 = distance_matrix(&self.g1);
        let d2 = distance_matrix(&self.g2);
        for u in self.big_cycle.clone() {
            for (i, &w) in self.gadget.iter().enumerate() {
                let a = d1.get(u, w).finite().ok_or(Error::DisconnectedGraph)?;
                let b = d2.get(u, w).finite().ok_or(Error::DisconnectedGraph)?;
                let expected = if i == h_labels::FAR { a + 2 } else { a };
                if b != expected {
                    return Err(violation(format!(
                        "n={}: d_G2({u}, v{}) = {b}, expected {expected}",
                        self.n,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, graph6};

    #[test]
    fn simple_families() {
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.order(), c5.size()), (5, 5));
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert_eq!(complete_minus_matching(4).unwrap(), cycle(4).unwrap().permuted(&[0, 2, 1, 3]));
        assert!(complete_minus_matching(5).is_err());
        assert!(cycle(2).is_err());
        assert_eq!(path(1).unwrap().size(), 0);
        assert_eq!(complete(6).unwrap().size(), 15);
    }

    #[test]
    fn gadget_shape() {
        let h = h_gadget();
        assert_eq!(h.order(), 7);
        let mut deg = h.degrees();
        assert_eq!(deg[h_labels::SHARED], 4);
        deg.sort_unstable();
        assert_eq!(deg, vec![2, 2, 2, 2, 2, 2, 4]);
        let d = distance_matrix(&h);
        assert_eq!(d.get(h_labels::ATTACH, h_labels::FAR).finite(), Some(4));
        assert_eq!(d.get(h_labels::ATTACH, h_labels::SHARED).finite(), Some(2));
    }

    #[test]
    fn amalgamation() {
        let b = amalgamate(&cycle(3).unwrap(), 0, &cycle(3).unwrap(), 0).unwrap();
        let mut deg = b.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(deg, vec![4, 2, 2, 2, 2]);
        assert_eq!(b, bouquet(&[3, 3]).unwrap());

        let k1 = Graph::empty(1).unwrap();
        assert_eq!(amalgamate(&k1, 0, &cycle(5).unwrap(), 0).unwrap(), cycle(5).unwrap());
        assert!(matches!(
            amalgamate(&k1, 1, &k1, 0),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn g_pairs() {
        for n in [10, 18, 40, 64] {
            let p = g_pair(n).unwrap();
            assert_eq!((p.g1.order(), p.g2.order()), (n, n));
            assert_eq!((p.g1.size(), p.g2.size()), (n + 1, n + 2));
            assert!(classify(&p.g1).eulerian && classify(&p.g2).eulerian);
            assert_eq!(p.g2.degree(p.gadget[h_labels::SHARED]), 4);
        }
        let p = g_pair(18).unwrap();
        assert_eq!(p.g1, amalgamate(&cycle(12).unwrap(), 0, &cycle(7).unwrap(), 0).unwrap());
        assert!(g_pair(9).is_err());
    }

    #[test]
    fn deterministic_output() {
        for spec in [FamilySpec::G2(18), FamilySpec::Bouquet(vec![3, 4, 5]), FamilySpec::H] {
            let a = graph6::encode(&build(&spec).unwrap()).unwrap();
            let b = graph6::encode(&build(&spec).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("g1:18".parse::<FamilySpec>().unwrap(), FamilySpec::G1(18));
        assert_eq!("bouquet:3,4".parse::<FamilySpec>().unwrap(), FamilySpec::Bouquet(vec![3, 4]));
        assert_eq!("h".parse::<FamilySpec>().unwrap(), FamilySpec::H);
        assert!("cycle".parse::<FamilySpec>().is_err());
        assert!("star:5".parse::<FamilySpec>().is_err());
        assert!(build(&FamilySpec::Bouquet(vec![3, 2])).is_err());
    }
}
