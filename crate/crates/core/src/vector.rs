use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PolarError, Result};
use crate::rational::Rational;

/// A point of `Q^n` or a covector of its dual; both share this representation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(PolarError::ZeroDimension);
        }
        Ok(Vector(coords))
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        assert!(!coords.is_empty(), "vector needs at least one coordinate");
        Vector(coords.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn scalar(value: Rational) -> Self {
        Vector(vec![value])
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "vector needs at least one coordinate");
        Vector(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// The single coordinate of a 1-D vector.
    pub fn as_scalar(&self) -> Option<&Rational> {
        match self.0.as_slice() {
            [x] => Some(x),
            _ => None,
        }
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(PolarError::DimensionMismatch { expected: dim, found: self.dim() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        other.check_dim(self.dim())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        other.check_dim(self.dim())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, t: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a * t).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    /// `t * self + (1 - t) * other`.
    pub fn lerp(&self, other: &Vector, t: &Rational) -> Result<Vector> {
        other.check_dim(self.dim())?;
        let s = Rational::one() - t;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a * t + b * &s).collect()))
    }

    /// Returns `t > 0` with `self = t * base`, if one exists.
    pub fn positive_multiple_of(&self, base: &Vector) -> Option<Rational> {
        if self.dim() != base.dim() || base.is_zero() {
            return None;
        }
        let (i, b) = base.0.iter().enumerate().find(|(_, b)| !b.is_zero())?;
        let t = &self.0[i] / b;
        if !t.is_positive() {
            return None;
        }
        (base.scale(&t) == *self).then_some(t)
    }
}

/// The duality product `<x, x*>`, computed exactly.
pub fn pairing(x: &Vector, xstar: &Vector) -> Result<Rational> {
    xstar.check_dim(x.dim())?;
    Ok(x.0.iter().zip(&xstar.0).map(|(a, b)| a * b).sum())
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<Rational>::deserialize(deserializer)?;
        Vector::new(coords).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&Vector::from_ints(&[1]), &Vector::from_ints(&[-1])).unwrap(), q(-1, 1));
        assert_eq!(pairing(&Vector::from_ints(&[0, 0]), &Vector::from_ints(&[5, 7])).unwrap(), q(0, 1));
        assert_eq!(pairing(&Vector::from_ints(&[1, 2]), &Vector::from_ints(&[3, -1])).unwrap(), q(1, 1));
    }

    #[test]
    fn pairing_dimension_mismatch() {
        let err = pairing(&Vector::from_ints(&[1]), &Vector::from_ints(&[1, 2])).unwrap_err();
        assert_eq!(err, PolarError::DimensionMismatch { expected: 1, found: 2 });
    }

    #[test]
    fn positive_multiple() {
        let v = Vector::from_ints(&[2, -4]);
        assert_eq!(v.positive_multiple_of(&Vector::from_ints(&[1, -2])), Some(q(2, 1)));
        assert_eq!(v.positive_multiple_of(&Vector::from_ints(&[-1, 2])), None);
        assert_eq!(v.positive_multiple_of(&Vector::from_ints(&[1, -1])), None);
        assert_eq!(Vector::zero(2).positive_multiple_of(&Vector::from_ints(&[1, 0])), None);
    }

    #[test]
    fn empty_vector_rejected() {
        assert_eq!(Vector::new(vec![]).unwrap_err(), PolarError::ZeroDimension);
        assert!(serde_json::from_str::<Vector>("[]").is_err());
    }
}
