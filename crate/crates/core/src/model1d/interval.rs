use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PolarError, Result};
use crate::rational::Rational;

/// An endpoint value on the extended rational line.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }

    fn cmp_rational(&self, x: &Rational) -> Ordering {
        match self {
            Bound::NegInf => Ordering::Less,
            Bound::PosInf => Ordering::Greater,
            Bound::Finite(r) => r.cmp(x),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => write!(f, "-inf"),
            Bound::PosInf => write!(f, "+inf"),
            Bound::Finite(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One end of an interval. Infinite endpoints are never closed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Endpoint {
    pub value: Bound,
    pub closed: bool,
}

impl Endpoint {
    pub fn closed(r: Rational) -> Self {
        Endpoint { value: Bound::Finite(r), closed: true }
    }

    pub fn open(r: Rational) -> Self {
        Endpoint { value: Bound::Finite(r), closed: false }
    }

    pub fn neg_inf() -> Self {
        Endpoint { value: Bound::NegInf, closed: false }
    }

    pub fn pos_inf() -> Self {
        Endpoint { value: Bound::PosInf, closed: false }
    }
}

/// Tightness order for lower endpoints: greater means a smaller set.
fn cmp_lower(a: &Endpoint, b: &Endpoint) -> Ordering {
    a.value.cmp(&b.value).then_with(|| b.closed.cmp(&a.closed))
}

/// Tightness order for upper endpoints: greater means a larger set.
fn cmp_upper(a: &Endpoint, b: &Endpoint) -> Ordering {
    a.value.cmp(&b.value).then_with(|| a.closed.cmp(&b.closed))
}

/// A nonempty interval of the rational line.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval1D {
    lo: Endpoint,
    hi: Endpoint,
}

impl Interval1D {
    pub fn new(lo: Endpoint, hi: Endpoint) -> Result<Self> {
        if matches!(lo.value, Bound::PosInf) || matches!(hi.value, Bound::NegInf) {
            return Err(PolarError::EmptyInterval(format!("{lo:?}..{hi:?}")));
        }
        let lo = Endpoint { closed: lo.closed && lo.value.finite().is_some(), ..lo };
        let hi = Endpoint { closed: hi.closed && hi.value.finite().is_some(), ..hi };
        let ok = match lo.value.cmp(&hi.value) {
            Ordering::Less => true,
            Ordering::Equal => lo.closed && hi.closed,
            Ordering::Greater => false,
        };
        if !ok {
            return Err(PolarError::EmptyInterval(format!(
                "{}{}, {}{}",
                if lo.closed { "[" } else { "]" },
                lo.value,
                hi.value,
                if hi.closed { "]" } else { "[" }
            )));
        }
        Ok(Interval1D { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Interval1D { lo: Endpoint::closed(x.clone()), hi: Endpoint::closed(x) }
    }

    pub fn closed(a: Rational, b: Rational) -> Result<Self> {
        Interval1D::new(Endpoint::closed(a), Endpoint::closed(b))
    }

    pub fn open(a: Rational, b: Rational) -> Result<Self> {
        Interval1D::new(Endpoint::open(a), Endpoint::open(b))
    }

    pub fn real_line() -> Self {
        Interval1D { lo: Endpoint::neg_inf(), hi: Endpoint::pos_inf() }
    }

    /// `]-inf, x]` or `]-inf, x[`.
    pub fn below(x: Rational, closed: bool) -> Self {
        Interval1D { lo: Endpoint::neg_inf(), hi: Endpoint { value: Bound::Finite(x), closed } }
    }

    /// `[x, +inf[` or `]x, +inf[`.
    pub fn above(x: Rational, closed: bool) -> Self {
        Interval1D { lo: Endpoint { value: Bound::Finite(x), closed }, hi: Endpoint::pos_inf() }
    }

    pub fn lo(&self) -> &Endpoint {
        &self.lo
    }

    pub fn hi(&self) -> &Endpoint {
        &self.hi
    }

    pub fn singleton(&self) -> Option<&Rational> {
        match (&self.lo.value, &self.hi.value) {
            (Bound::Finite(a), Bound::Finite(b)) if a == b => Some(a),
            _ => None,
        }
    }

    pub fn is_real_line(&self) -> bool {
        self.lo.value == Bound::NegInf && self.hi.value == Bound::PosInf
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above_lo = match self.lo.value.cmp_rational(x) {
            Ordering::Less => true,
            Ordering::Equal => self.lo.closed,
            Ordering::Greater => false,
        };
        let below_hi = match self.hi.value.cmp_rational(x) {
            Ordering::Greater => true,
            Ordering::Equal => self.hi.closed,
            Ordering::Less => false,
        };
        above_lo && below_hi
    }

    pub fn intersect(&self, other: &Interval1D) -> Option<Interval1D> {
        let lo = if cmp_lower(&self.lo, &other.lo) == Ordering::Less { &other.lo } else { &self.lo };
        let hi = if cmp_upper(&self.hi, &other.hi) == Ordering::Greater { &other.hi } else { &self.hi };
        Interval1D::new(lo.clone(), hi.clone()).ok()
    }

    /// Whether `self ∪ other` is an interval (overlapping or touching).
    pub fn connects(&self, other: &Interval1D) -> bool {
        let (first, second) = if self.order_key(other) == Ordering::Greater { (other, self) } else { (self, other) };
        match first.hi.value.cmp(&second.lo.value) {
            Ordering::Greater => true,
            Ordering::Equal => first.hi.closed || second.lo.closed,
            Ordering::Less => false,
        }
    }

    /// Smallest interval containing both; only meaningful when they connect.
    pub(crate) fn hull(&self, other: &Interval1D) -> Interval1D {
        let lo = if cmp_lower(&self.lo, &other.lo) == Ordering::Greater { &other.lo } else { &self.lo };
        let hi = if cmp_upper(&self.hi, &other.hi) == Ordering::Less { &other.hi } else { &self.hi };
        Interval1D { lo: lo.clone(), hi: hi.clone() }
    }

    /// Ordering by lower endpoint, then upper.
    pub fn order_key(&self, other: &Interval1D) -> Ordering {
        cmp_lower(&self.lo, &other.lo).then_with(|| cmp_upper(&self.hi, &other.hi))
    }

    /// `self ∩ ]-inf, x[`.
    pub fn part_below(&self, x: &Rational) -> Option<Interval1D> {
        self.intersect(&Interval1D::below(x.clone(), false))
    }

    /// `self ∩ ]x, +inf[`.
    pub fn part_above(&self, x: &Rational) -> Option<Interval1D> {
        self.intersect(&Interval1D::above(x.clone(), false))
    }

    /// Some rational in the interval, preferring an interior point.
    pub fn sample(&self) -> Rational {
        match (&self.lo.value, &self.hi.value) {
            (Bound::Finite(a), Bound::Finite(b)) => a.midpoint(b),
            (Bound::Finite(a), _) => a + &Rational::one(),
            (_, Bound::Finite(b)) => b - &Rational::one(),
            _ => Rational::zero(),
        }
    }

    /// Whether every element of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Interval1D) -> bool {
        cmp_lower(&self.lo, &other.lo) != Ordering::Less && cmp_upper(&self.hi, &other.hi) != Ordering::Greater
    }

    pub fn finite_endpoints(&self) -> impl Iterator<Item = &Rational> {
        self.lo.value.finite().into_iter().chain(self.hi.value.finite())
    }
}

impl fmt::Display for Interval1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(x) = self.singleton() {
            return write!(f, "{{{x}}}");
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lo.closed { "[" } else { "]" },
            self.lo.value,
            self.hi.value,
            if self.hi.closed { "]" } else { "[" }
        )
    }
}

impl fmt::Debug for Interval1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalRepr {
    lo: String,
    lo_closed: bool,
    hi: String,
    hi_closed: bool,
}

fn parse_bound(s: &str) -> Result<Bound> {
    match s.trim() {
        "-inf" | "−inf" | "-infinity" => Ok(Bound::NegInf),
        "+inf" | "inf" | "+infinity" | "infinity" => Ok(Bound::PosInf),
        other => Ok(Bound::Finite(other.parse()?)),
    }
}

impl Serialize for Interval1D {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IntervalRepr {
            lo: self.lo.value.to_string(),
            lo_closed: self.lo.closed,
            hi: self.hi.value.to_string(),
            hi_closed: self.hi.closed,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval1D {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = IntervalRepr::deserialize(d)?;
        let build = || -> Result<Interval1D> {
            let lo = parse_bound(&repr.lo)?;
            let hi = parse_bound(&repr.hi)?;
            if (lo == Bound::NegInf && repr.lo_closed) || (hi == Bound::PosInf && repr.hi_closed) {
                return Err(PolarError::Parse("infinite endpoints cannot be closed".into()));
            }
            Interval1D::new(
                Endpoint { value: lo, closed: repr.lo_closed },
                Endpoint { value: hi, closed: repr.hi_closed },
            )
        };
        build().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn empty_intervals_rejected() {
        assert!(Interval1D::open(q(1, 1), q(1, 1)).is_err());
        assert!(Interval1D::closed(q(2, 1), q(1, 1)).is_err());
        assert!(Interval1D::new(Endpoint::closed(q(1, 1)), Endpoint::open(q(1, 1))).is_err());
        assert!(Interval1D::closed(q(1, 1), q(1, 1)).is_ok());
    }

    #[test]
    fn membership_respects_closedness() {
        let i = Interval1D::new(Endpoint::open(q(0, 1)), Endpoint::closed(q(1, 1))).unwrap();
        assert!(!i.contains(&q(0, 1)));
        assert!(i.contains(&q(1, 1)));
        assert!(i.contains(&q(1, 2)));
        assert!(!i.contains(&q(3, 2)));
        assert!(Interval1D::real_line().contains(&q(-1000, 1)));
    }

    #[test]
    fn intersection() {
        let a = Interval1D::closed(q(0, 1), q(2, 1)).unwrap();
        let b = Interval1D::closed(q(1, 1), q(3, 1)).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), Interval1D::closed(q(1, 1), q(2, 1)).unwrap());
        let c = Interval1D::above(q(2, 1), false);
        assert!(a.intersect(&c).is_none());
        let d = Interval1D::above(q(2, 1), true);
        assert_eq!(a.intersect(&d).unwrap(), Interval1D::point(q(2, 1)));
        assert_eq!(a.part_below(&q(0, 1)), None);
        assert_eq!(Interval1D::real_line().part_above(&q(0, 1)).unwrap(), Interval1D::above(q(0, 1), false));
    }

    #[test]
    fn sample_is_inside() {
        for i in [
            Interval1D::open(q(0, 1), q(1, 1)).unwrap(),
            Interval1D::below(q(-3, 1), false),
            Interval1D::above(q(5, 2), false),
            Interval1D::real_line(),
            Interval1D::point(q(7, 3)),
        ] {
            assert!(i.contains(&i.sample()), "{i}");
        }
    }

    #[test]
    fn json_form() {
        let i = Interval1D::below(q(0, 1), true);
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"lo":"-inf","lo_closed":false,"hi":"0","hi_closed":true}"#);
        assert_eq!(serde_json::from_str::<Interval1D>(&s).unwrap(), i);
        let bad = r#"{"lo":"-inf","lo_closed":true,"hi":"0","hi_closed":true}"#;
        assert!(serde_json::from_str::<Interval1D>(bad).is_err());
        let empty = r#"{"lo":"1","lo_closed":false,"hi":"1","hi_closed":true}"#;
        assert!(serde_json::from_str::<Interval1D>(empty).is_err());
    }
}
