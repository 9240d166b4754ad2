use std::fmt;

use serde::{Deserialize, Serialize};

use super::interval::Interval1D;
use crate::rational::Rational;

/// A finite union of intervals kept in canonical form: sorted, pairwise
/// disjoint and never touching, so structural equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct SolutionSet1D {
    components: Vec<Interval1D>,
}

impl SolutionSet1D {
    pub fn empty() -> Self {
        SolutionSet1D { components: Vec::new() }
    }

    pub fn real_line() -> Self {
        SolutionSet1D { components: vec![Interval1D::real_line()] }
    }

    pub fn from_interval(i: Interval1D) -> Self {
        SolutionSet1D { components: vec![i] }
    }

    pub fn from_points<'a>(points: impl IntoIterator<Item = &'a Rational>) -> Self {
        SolutionSet1D::new(points.into_iter().cloned().map(Interval1D::point))
    }

    pub fn new(intervals: impl IntoIterator<Item = Interval1D>) -> Self {
        let mut items: Vec<Interval1D> = intervals.into_iter().collect();
        items.sort_by(|a, b| a.order_key(b));
        let mut components: Vec<Interval1D> = Vec::with_capacity(items.len());
        for i in items {
            match components.last_mut() {
                Some(last) if last.connects(&i) => *last = last.hull(&i),
                _ => components.push(i),
            }
        }
        SolutionSet1D { components }
    }

    pub fn components(&self) -> &[Interval1D] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    pub fn union(&self, other: &SolutionSet1D) -> SolutionSet1D {
        SolutionSet1D::new(self.components.iter().chain(&other.components).cloned())
    }

    pub fn intersect(&self, other: &SolutionSet1D) -> SolutionSet1D {
        let mut out = Vec::new();
        for a in &self.components {
            for b in &other.components {
                out.extend(a.intersect(b));
            }
        }
        SolutionSet1D::new(out)
    }

    pub fn intersect_interval(&self, i: &Interval1D) -> SolutionSet1D {
        SolutionSet1D::new(self.components.iter().filter_map(|c| c.intersect(i)))
    }

    pub fn is_subset_of(&self, other: &SolutionSet1D) -> bool {
        self.components.iter().all(|c| other.components.iter().any(|o| c.is_subset_of(o)))
    }

    /// Whether the set is a single interval (or empty).
    pub fn is_convex(&self) -> bool {
        self.components.len() <= 1
    }
}

impl fmt::Display for SolutionSet1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "∅");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SolutionSet1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for SolutionSet1D {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            components: Vec<Interval1D>,
        }
        Ok(SolutionSet1D::new(Raw::deserialize(d)?.components))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model1d::interval::Endpoint;
    use crate::rational::q;

    #[test]
    fn adjacency_merge() {
        let zero = SolutionSet1D::from_interval(Interval1D::point(q(0, 1)));
        let half_open =
            SolutionSet1D::from_interval(Interval1D::new(Endpoint::open(q(0, 1)), Endpoint::closed(q(1, 1))).unwrap());
        assert_eq!(zero.union(&half_open), SolutionSet1D::from_interval(Interval1D::closed(q(0, 1), q(1, 1)).unwrap()));
    }

    #[test]
    fn open_gaps_are_kept() {
        let a = Interval1D::open(q(0, 1), q(1, 1)).unwrap();
        let b = Interval1D::open(q(1, 1), q(2, 1)).unwrap();
        let s = SolutionSet1D::new([b, a]);
        assert_eq!(s.components().len(), 2);
        assert!(!s.contains(&q(1, 1)));
    }

    #[test]
    fn intersection_and_empty() {
        let a = SolutionSet1D::from_interval(Interval1D::closed(q(0, 1), q(2, 1)).unwrap());
        let b = SolutionSet1D::from_interval(Interval1D::closed(q(1, 1), q(3, 1)).unwrap());
        assert_eq!(a.intersect(&b), SolutionSet1D::from_interval(Interval1D::closed(q(1, 1), q(2, 1)).unwrap()));
        assert_eq!(SolutionSet1D::empty().union(&SolutionSet1D::empty()), SolutionSet1D::empty());
    }

    #[test]
    fn subset() {
        let small = SolutionSet1D::from_points([&q(1, 1), &q(2, 1)]);
        let big = SolutionSet1D::from_interval(Interval1D::closed(q(0, 1), q(2, 1)).unwrap());
        assert!(small.is_subset_of(&big));
        assert!(!big.is_subset_of(&small));
        assert!(SolutionSet1D::empty().is_subset_of(&small));
    }
}
