use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PolarError, Result};
use crate::rational::Rational;

/// How one open side of the dual line participates in a [`Cone1D`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Absent,
    Open,
    /// The half-line together with 0.
    Closed,
}

/// A subset of the dual line from the family
/// `{∅, {0}, R++, R--, R+, R-, R\{0}, R}`.
///
/// The canonical encoding marks a side `closed` exactly when 0 is included
/// and the opposite side is absent, so `R-` is `{neg: closed, zero: true,
/// pos: absent}` while `R` is `{neg: open, zero: true, pos: open}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Cone1D {
    neg: Side,
    zero: bool,
    pos: Side,
}

impl Cone1D {
    pub const EMPTY: Cone1D = Cone1D::from_signs(false, false, false);
    pub const ZERO: Cone1D = Cone1D::from_signs(false, true, false);
    pub const POS_OPEN: Cone1D = Cone1D::from_signs(false, false, true);
    pub const NEG_OPEN: Cone1D = Cone1D::from_signs(true, false, false);
    pub const POS_CLOSED: Cone1D = Cone1D::from_signs(false, true, true);
    pub const NEG_CLOSED: Cone1D = Cone1D::from_signs(true, true, false);
    pub const NONZERO: Cone1D = Cone1D::from_signs(true, false, true);
    pub const ALL: Cone1D = Cone1D::from_signs(true, true, true);

    pub const FAMILY: [Cone1D; 8] = [
        Cone1D::EMPTY,
        Cone1D::ZERO,
        Cone1D::POS_OPEN,
        Cone1D::NEG_OPEN,
        Cone1D::POS_CLOSED,
        Cone1D::NEG_CLOSED,
        Cone1D::NONZERO,
        Cone1D::ALL,
    ];

    pub const fn from_signs(neg: bool, zero: bool, pos: bool) -> Self {
        const fn side(present: bool, zero: bool, other: bool) -> Side {
            match (present, zero && !other) {
                (false, _) => Side::Absent,
                (true, true) => Side::Closed,
                (true, false) => Side::Open,
            }
        }
        Cone1D { neg: side(neg, zero, pos), zero, pos: side(pos, zero, neg) }
    }

    /// Builds from raw fields, normalizing; `closed` without `zero` is rejected.
    pub fn from_parts(neg: Side, zero: bool, pos: Side) -> Result<Self> {
        if !zero && (neg == Side::Closed || pos == Side::Closed) {
            return Err(PolarError::Parse("a closed side requires zero: true".into()));
        }
        Ok(Cone1D::from_signs(neg != Side::Absent, zero, pos != Side::Absent))
    }

    pub fn has_neg(&self) -> bool {
        self.neg != Side::Absent
    }

    pub fn has_zero(&self) -> bool {
        self.zero
    }

    pub fn has_pos(&self) -> bool {
        self.pos != Side::Absent
    }

    pub fn neg(&self) -> Side {
        self.neg
    }

    pub fn pos(&self) -> Side {
        self.pos
    }

    pub fn contains_sign(&self, s: Ordering) -> bool {
        match s {
            Ordering::Less => self.has_neg(),
            Ordering::Equal => self.zero,
            Ordering::Greater => self.has_pos(),
        }
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.contains_sign(v.sign())
    }

    pub fn is_empty(&self) -> bool {
        *self == Cone1D::EMPTY
    }

    pub fn intersect(&self, other: &Cone1D) -> Cone1D {
        Cone1D::from_signs(
            self.has_neg() && other.has_neg(),
            self.zero && other.zero,
            self.has_pos() && other.has_pos(),
        )
    }

    pub fn union(&self, other: &Cone1D) -> Cone1D {
        Cone1D::from_signs(
            self.has_neg() || other.has_neg(),
            self.zero || other.zero,
            self.has_pos() || other.has_pos(),
        )
    }

    pub fn is_subset_of(&self, other: &Cone1D) -> bool {
        self.intersect(other) == *self
    }

    /// Representative values, one per included sign class.
    pub fn representatives(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        if self.has_neg() {
            out.push(Rational::from_int(-1));
        }
        if self.zero {
            out.push(Rational::zero());
        }
        if self.has_pos() {
            out.push(Rational::one());
        }
        out
    }

    pub fn name(&self) -> &'static str {
        match (self.has_neg(), self.zero, self.has_pos()) {
            (false, false, false) => "empty",
            (false, true, false) => "{0}",
            (false, false, true) => "R++",
            (true, false, false) => "R--",
            (false, true, true) => "R+",
            (true, true, false) => "R-",
            (true, false, true) => "R\\{0}",
            (true, true, true) => "R",
        }
    }
}

impl fmt::Debug for Cone1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Cone1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Cone1D {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            neg: Side,
            zero: bool,
            pos: Side,
        }
        let raw = Raw::deserialize(d)?;
        Cone1D::from_parts(raw.neg, raw.zero, raw.pos).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn intersections() {
        assert_eq!(Cone1D::POS_CLOSED.intersect(&Cone1D::NEG_CLOSED), Cone1D::ZERO);
        assert_eq!(Cone1D::NEG_OPEN.intersect(&Cone1D::ALL), Cone1D::NEG_OPEN);
        assert_eq!(Cone1D::POS_OPEN.intersect(&Cone1D::NEG_CLOSED), Cone1D::EMPTY);
    }

    #[test]
    fn membership() {
        assert!(Cone1D::NEG_CLOSED.contains(&q(0, 1)));
        assert!(Cone1D::NEG_CLOSED.contains(&q(-5, 2)));
        assert!(!Cone1D::NEG_CLOSED.contains(&q(1, 9)));
        assert!(!Cone1D::NONZERO.contains(&q(0, 1)));
    }

    #[test]
    fn encoding_is_a_bijection_on_the_family() {
        let mut seen = std::collections::HashSet::new();
        for c in Cone1D::FAMILY {
            let json = serde_json::to_string(&c).unwrap();
            assert!(seen.insert(json.clone()), "duplicate encoding {json}");
            let back: Cone1D = serde_json::from_str(&json).unwrap();
            assert_eq!(back, c);
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn documented_encodings() {
        assert_eq!(
            serde_json::to_string(&Cone1D::NEG_CLOSED).unwrap(),
            r#"{"neg":"closed","zero":true,"pos":"absent"}"#
        );
        assert_eq!(serde_json::to_string(&Cone1D::ALL).unwrap(), r#"{"neg":"open","zero":true,"pos":"open"}"#);
        // a non-canonical but consistent encoding normalizes
        let all: Cone1D = serde_json::from_str(r#"{"neg":"closed","zero":true,"pos":"closed"}"#).unwrap();
        assert_eq!(all, Cone1D::ALL);
        assert!(serde_json::from_str::<Cone1D>(r#"{"neg":"closed","zero":false,"pos":"absent"}"#).is_err());
    }
}
