use serde::Serialize;

use super::cycle_vertex_sequence;
use crate::error::{Error, Result};
use crate::indices::{cycle_profile, DistanceProfile, Rational};

/// Distance multisets for a cycle `C_a` glued to a remainder of order `b`.
///
/// `s` collects the distances inside `C_a`, inside a `C_b`, and across the
/// gluing of `C_a` with a path on `b` vertices at a shared end vertex. `t`
/// is the profile of `C_{a+b-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim1Report {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub x: usize,
    pub y: usize,
    #[serde(serialize_with = "as_string")]
    pub s: DistanceProfile,
    #[serde(serialize_with = "as_string")]
    pub t: DistanceProfile,
    /// Every distance in `1..y` occurs at least `n` times in `s`.
    pub low_range_ok: bool,
    /// Every distance above `y` occurs at most `a - 1` times in `s`.
    pub high_range_ok: bool,
    /// `max(s - t) < min(t - s)`; true when either difference is empty.
    pub separation_ok: bool,
    pub reciprocal_ok: bool,
    /// Reciprocal sum of `s` minus that of `t`.
    pub reciprocal_margin: Rational,
}

fn as_string<S: serde::Serializer>(p: &DistanceProfile, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

pub fn claim1_check(a: usize, b: usize) -> Result<Claim1Report> {
    if a < 3 || a > b {
        return Err(Error::SpecViolation(format!("need 3 <= a <= b, got a={a}, b={b}")));
    }
    let n = a + b - 1;
    let (x, y) = (a / 2, b / 2);

    let mut s = cycle_profile(a)?.union(&cycle_profile(b)?);
    for p in 1..b as u32 {
        for &c in &cycle_vertex_sequence(a) {
            s.add(p + c, 1);
        }
    }
    let t = cycle_profile(n)?;
    let pairs = (n * (n - 1) / 2) as u64;
    if s.pair_total() != pairs || t.pair_total() != pairs {
        return Err(Error::SpecViolation(format!(
            "pair totals {} and {} differ from {pairs}",
            s.pair_total(),
            t.pair_total()
        )));
    }

    let low_range_ok = (1..y as u32).all(|d| s.count(d) >= n as u64);
    let high_range_ok = s.iter().filter(|&(d, _)| d > y as u32).all(|(_, c)| c < a as u64);
    let separation_ok = match (s.difference(&t).max_distance(), t.difference(&s).min_distance()) {
        (Some(hi), Some(lo)) => hi < lo,
        _ => true,
    };
    let reciprocal_margin = s.reciprocal_sum() - t.reciprocal_sum();
    Ok(Claim1Report {
        a,
        b,
        n,
        x,
        y,
        low_range_ok,
        high_range_ok,
        separation_ok,
        reciprocal_ok: !reciprocal_margin.is_negative(),
        reciprocal_margin,
        s,
        t,
    })
}

/// Reports for every split `3 <= a <= b` with `a + b - 1 <= n_max`.
pub fn claim1_range(n_max: usize) -> Result<Vec<Claim1Report>> {
    let mut out = Vec::new();
    for a in 3..=n_max {
        for b in a..=(n_max + 1).saturating_sub(a) {
            out.push(claim1_check(a, b)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_split() {
        let r = claim1_check(3, 3).unwrap();
        assert_eq!(r.s, DistanceProfile::from_counts([(1, 6), (2, 2), (3, 2)]));
        assert_eq!(r.t, DistanceProfile::from_counts([(1, 5), (2, 5)]));
        assert!(r.reciprocal_ok);
        assert!(!r.separation_ok);
        assert_eq!(r.reciprocal_margin, "1/6".parse().unwrap());
    }

    #[test]
    fn five_seven() {
        let r = claim1_check(5, 7).unwrap();
        assert_eq!(r.s.pair_total(), 55);
        assert_eq!(r.t.pair_total(), 55);
        assert!(r.low_range_ok && r.high_range_ok && r.reciprocal_ok);
    }

    #[test]
    fn four_eight_low_range() {
        let r = claim1_check(4, 8).unwrap();
        assert_eq!(r.y, 4);
        for d in 1..4 {
            assert!(r.s.count(d) >= 11);
        }
    }

    #[test]
    fn rejects_bad_splits() {
        assert!(claim1_check(2, 5).is_err());
        assert!(claim1_check(6, 5).is_err());
    }

    #[test]
    fn range_covers_all_splits() {
        let rs = claim1_range(9).unwrap();
        assert!(rs.iter().all(|r| r.a <= r.b && r.n <= 9));
        // a + b <= 10 with 3 <= a <= b.
        assert_eq!(rs.len(), 5 + 3 + 1);
    }
}
