use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;

/// Multiset of pair distances: distance -> number of unordered pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceProfile {
    multiplicity: BTreeMap<u32, u64>,
}

impl DistanceProfile {
    pub fn new() -> Self {
        Self::default()
    }

    /// From `(distance, count)` pairs; zero counts are dropped.
    ///
    /// # Panics
    /// On distance 0, which no pair of distinct vertices can realise.
    pub fn from_counts(counts: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut p = Self::new();
        for (d, c) in counts {
            p.add(d, c);
        }
        p
    }

    pub fn add(&mut self, distance: u32, count: u64) {
        assert!(distance >= 1, "distance profile entries start at 1");
        if count > 0 {
            *self.multiplicity.entry(distance).or_insert(0) += count;
        }
    }

    pub fn count(&self, distance: u32) -> u64 {
        self.multiplicity.get(&distance).copied().unwrap_or(0)
    }

    pub fn pair_total(&self) -> u64 {
        self.multiplicity.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.multiplicity.iter().map(|(&d, &c)| (d, c))
    }

    pub fn max_distance(&self) -> Option<u32> {
        self.multiplicity.keys().next_back().copied()
    }

    pub fn min_distance(&self) -> Option<u32> {
        self.multiplicity.keys().next().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicity.is_empty()
    }

    /// Multiset sum.
    pub fn union(&self, other: &DistanceProfile) -> DistanceProfile {
        let mut out = self.clone();
        for (d, c) in other.iter() {
            out.add(d, c);
        }
        out
    }

    /// Multiset difference with count-wise truncated subtraction.
    pub fn difference(&self, other: &DistanceProfile) -> DistanceProfile {
        DistanceProfile::from_counts(self.iter().map(|(d, c)| (d, c.saturating_sub(other.count(d)))))
    }

    /// Sum of `distance * count`.
    pub fn wiener(&self) -> u64 {
        self.iter().map(|(d, c)| d as u64 * c).sum()
    }

    /// Sum of `count / distance`, exact.
    pub fn reciprocal_sum(&self) -> Rational {
        self.iter().map(|(d, c)| Rational::ratio(c, d as u64)).sum()
    }
}

impl fmt::Display for DistanceProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (d, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}:{c}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_operations() {
        let s = DistanceProfile::from_counts([(1, 6), (2, 2), (3, 2)]);
        let t = DistanceProfile::from_counts([(1, 5), (2, 5)]);
        assert_eq!(s.difference(&t), DistanceProfile::from_counts([(1, 1), (3, 2)]));
        assert_eq!(t.difference(&s), DistanceProfile::from_counts([(2, 3)]));
        assert_eq!(s.union(&t).pair_total(), 20);
        assert_eq!(s.to_string(), "{1:6, 2:2, 3:2}");
        assert_eq!(DistanceProfile::from_counts([(4, 0)]), DistanceProfile::new());
    }

    #[test]
    #[should_panic]
    fn rejects_zero_distance() {
        DistanceProfile::from_counts([(0, 1)]);
    }
}
