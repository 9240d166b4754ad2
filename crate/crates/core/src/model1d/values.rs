use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::cone::Cone1D;
use crate::error::PolarError;
use crate::rational::Rational;

/// Direction of an open ray `{t * g : t > 0}` with generator normalized to ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Neg,
    Pos,
}

impl Direction {
    pub fn sign(self) -> Ordering {
        match self {
            Direction::Neg => Ordering::Less,
            Direction::Pos => Ordering::Greater,
        }
    }

    pub fn generator(self) -> Rational {
        match self {
            Direction::Neg => Rational::from_int(-1),
            Direction::Pos => Rational::one(),
        }
    }
}

/// One covector "atom": a single value or a whole open ray.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Point(Rational),
    Ray(Direction),
}

impl Atom {
    pub fn sign(&self) -> Ordering {
        match self {
            Atom::Point(r) => r.sign(),
            Atom::Ray(d) => d.sign(),
        }
    }

    /// A concrete covector from the atom (the generator for rays).
    pub fn representative(&self) -> Rational {
        match self {
            Atom::Point(r) => r.clone(),
            Atom::Ray(d) => d.generator(),
        }
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Point(r) => write!(f, "{r}"),
            Atom::Ray(Direction::Pos) => write!(f, "R++"),
            Atom::Ray(Direction::Neg) => write!(f, "R--"),
        }
    }
}

/// A covector set on the line: finitely many points plus up to two open rays.
///
/// Points already covered by a ray are dropped, so equal sets compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ValueSet1D {
    points: BTreeSet<Rational>,
    neg_ray: bool,
    pos_ray: bool,
}

impl ValueSet1D {
    pub fn empty() -> Self {
        ValueSet1D::default()
    }

    pub fn new(points: impl IntoIterator<Item = Rational>, rays: impl IntoIterator<Item = Direction>) -> Self {
        let mut v = ValueSet1D::empty();
        for d in rays {
            match d {
                Direction::Neg => v.neg_ray = true,
                Direction::Pos => v.pos_ray = true,
            }
        }
        for p in points {
            v.insert_point(p);
        }
        v.normalize();
        v
    }

    pub fn point(p: Rational) -> Self {
        ValueSet1D::new([p], [])
    }

    pub fn from_cone(c: &Cone1D) -> Self {
        let mut rays = Vec::new();
        if c.has_neg() {
            rays.push(Direction::Neg);
        }
        if c.has_pos() {
            rays.push(Direction::Pos);
        }
        let points = c.has_zero().then(Rational::zero);
        ValueSet1D::new(points, rays)
    }

    fn insert_point(&mut self, p: Rational) {
        self.points.insert(p);
    }

    fn normalize(&mut self) {
        let (neg, pos) = (self.neg_ray, self.pos_ray);
        self.points.retain(|p| !(neg && p.is_negative() || pos && p.is_positive()));
    }

    pub fn points(&self) -> impl Iterator<Item = &Rational> {
        self.points.iter()
    }

    pub fn rays(&self) -> impl Iterator<Item = Direction> {
        let mut out = Vec::new();
        if self.neg_ray {
            out.push(Direction::Neg);
        }
        if self.pos_ray {
            out.push(Direction::Pos);
        }
        out.into_iter()
    }

    pub fn atoms(&self) -> Vec<Atom> {
        self.points.iter().cloned().map(Atom::Point).chain(self.rays().map(Atom::Ray)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && !self.neg_ray && !self.pos_ray
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.points.contains(v) || (self.neg_ray && v.is_negative()) || (self.pos_ray && v.is_positive())
    }

    pub fn contains_zero(&self) -> bool {
        self.points.contains(&Rational::zero())
    }

    pub fn contains_atom(&self, a: &Atom) -> bool {
        match a {
            Atom::Point(p) => self.contains(p),
            Atom::Ray(Direction::Neg) => self.neg_ray,
            Atom::Ray(Direction::Pos) => self.pos_ray,
        }
    }

    pub fn union(&self, other: &ValueSet1D) -> ValueSet1D {
        let mut v = ValueSet1D {
            points: self.points.union(&other.points).cloned().collect(),
            neg_ray: self.neg_ray || other.neg_ray,
            pos_ray: self.pos_ray || other.pos_ray,
        };
        v.normalize();
        v
    }

    /// First atom of `self` not contained in `other`.
    pub fn missing_from(&self, other: &ValueSet1D) -> Option<Atom> {
        self.atoms().into_iter().find(|a| !other.contains_atom(a))
    }

    pub fn is_subset_of(&self, other: &ValueSet1D) -> bool {
        self.missing_from(other).is_none()
    }

    /// The set as a sign cone, when it is one.
    pub fn to_cone(&self) -> Option<Cone1D> {
        if self.points.iter().any(|p| !p.is_zero()) {
            return None;
        }
        Some(Cone1D::from_signs(self.neg_ray, self.contains_zero(), self.pos_ray))
    }

    /// `cone∘` of the set: every nonzero value replaced by its open ray, zero kept if present.
    pub fn strict_conic_hull(&self) -> ValueSet1D {
        let neg = self.neg_ray || self.points.iter().any(Rational::is_negative);
        let pos = self.pos_ray || self.points.iter().any(Rational::is_positive);
        ValueSet1D::from_cone(&Cone1D::from_signs(neg, self.contains_zero(), pos))
    }
}

impl fmt::Debug for ValueSet1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.atoms()).finish()
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct ValueSetRepr {
    #[serde(default)]
    pub points: Vec<Rational>,
    #[serde(default)]
    pub rays: Vec<Rational>,
}

impl TryFrom<ValueSetRepr> for ValueSet1D {
    type Error = PolarError;
    fn try_from(r: ValueSetRepr) -> Result<Self, PolarError> {
        let rays = r
            .rays
            .iter()
            .map(|g| match g.sign() {
                Ordering::Less => Ok(Direction::Neg),
                Ordering::Greater => Ok(Direction::Pos),
                Ordering::Equal => Err(PolarError::Parse("ray generator must be nonzero".into())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ValueSet1D::new(r.points, rays))
    }
}

impl From<&ValueSet1D> for ValueSetRepr {
    fn from(v: &ValueSet1D) -> Self {
        ValueSetRepr { points: v.points.iter().cloned().collect(), rays: v.rays().map(Direction::generator).collect() }
    }
}
