use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::cone::Cone1D;
use super::interval::Interval1D;
use super::sign::{atoms_related, instantiate_violation};
use super::solution::SolutionSet1D;
use super::values::{Atom, ValueSet1D, ValueSetRepr};
use crate::error::{PolarError, Result};
use crate::operator::{FiniteOperator, Pair, PolarKind};
use crate::rational::Rational;

/// One piece `I × V` of a piecewise operator.
#[derive(Clone, PartialEq, Eq)]
pub struct Piece {
    pub interval: Interval1D,
    pub values: ValueSet1D,
}

impl Piece {
    pub fn new(interval: Interval1D, values: ValueSet1D) -> Self {
        Piece { interval, values }
    }
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} × {:?}", self.interval, self.values)
    }
}

impl Serialize for Piece {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            interval: &'a Interval1D,
            #[serde(flatten)]
            values: ValueSetRepr,
        }
        Repr { interval: &self.interval, values: ValueSetRepr::from(&self.values) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Piece {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            interval: Interval1D,
            #[serde(default)]
            points: Vec<Rational>,
            #[serde(default)]
            rays: Vec<Rational>,
        }
        let r = Repr::deserialize(d)?;
        let values =
            ValueSet1D::try_from(ValueSetRepr { points: r.points, rays: r.rays }).map_err(serde::de::Error::custom)?;
        Ok(Piece { interval: r.interval, values })
    }
}

/// A multivalued operator on the line whose graph is a finite union of
/// `interval × value set` pieces. Pieces may overlap; images then union.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PiecewiseOperator1D {
    pieces: Vec<Piece>,
}

impl fmt::Debug for PiecewiseOperator1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.pieces).finish()
    }
}

/// A graph element of a piecewise operator: a point and a covector atom.
pub type Element = (Rational, Atom);

/// Verdict with an optional pair of concrete violating graph pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PwVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(Pair, Pair)>,
}

impl PwVerdict {
    fn from_witness(witness: Option<(Pair, Pair)>) -> Self {
        PwVerdict { holds: witness.is_none(), witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PwClassification {
    pub monotone: PwVerdict,
    pub quasimonotone: PwVerdict,
    pub pseudomonotone: PwVerdict,
}

impl PiecewiseOperator1D {
    pub fn new(pieces: Vec<Piece>) -> Self {
        PiecewiseOperator1D { pieces }
    }

    pub fn empty() -> Self {
        PiecewiseOperator1D::default()
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Each graph pair of a 1-D finite operator becomes a singleton piece.
    pub fn from_finite(op: &FiniteOperator) -> Result<Self> {
        if op.dim() != 1 {
            return Err(PolarError::DimensionMismatch { expected: 1, found: op.dim() });
        }
        let pieces = op
            .graph()
            .iter()
            .map(|p| {
                let x = p.point.as_scalar().expect("1-D").clone();
                let v = p.covector.as_scalar().expect("1-D").clone();
                Piece::new(Interval1D::point(x), ValueSet1D::point(v))
            })
            .collect();
        Ok(PiecewiseOperator1D { pieces })
    }

    /// Finite endpoints of all pieces.
    pub fn breakpoints(&self) -> BTreeSet<Rational> {
        self.pieces.iter().flat_map(|p| p.interval.finite_endpoints().cloned()).collect()
    }

    /// `T(x)`.
    pub fn fiber(&self, x: &Rational) -> ValueSet1D {
        self.pieces.iter().filter(|p| p.interval.contains(x)).fold(ValueSet1D::empty(), |acc, p| acc.union(&p.values))
    }

    pub fn domain(&self) -> SolutionSet1D {
        SolutionSet1D::new(self.pieces.iter().filter(|p| !p.values.is_empty()).map(|p| p.interval.clone()))
    }

    /// `Z_T`.
    pub fn zeros(&self) -> SolutionSet1D {
        SolutionSet1D::new(self.pieces.iter().filter(|p| p.values.contains_zero()).map(|p| p.interval.clone()))
    }

    /// Graph restricted to points of `set`.
    pub fn restrict(&self, set: &SolutionSet1D) -> Self {
        let mut pieces = Vec::new();
        for p in &self.pieces {
            for c in set.components() {
                if let Some(i) = p.interval.intersect(c) {
                    pieces.push(Piece::new(i, p.values.clone()));
                }
            }
        }
        PiecewiseOperator1D { pieces }
    }

    /// Finite sample of graph elements, one per cell of the breakpoint
    /// partition and atom. Every relation question about the graph is
    /// decided by these because relations only depend on the cell order.
    pub fn elements(&self) -> Vec<Element> {
        let mut out = Vec::new();
        for cell in cells(&self.breakpoints()) {
            let x = cell.sample();
            for a in self.fiber(&x).atoms() {
                out.push((x.clone(), a));
            }
        }
        out
    }

    fn pieces_without_empty(&self) -> impl Iterator<Item = &Piece> {
        self.pieces.iter().filter(|p| !p.values.is_empty())
    }
}

/// Partition of the line into the breakpoints and the open gaps between them.
pub fn cells(breaks: &BTreeSet<Rational>) -> Vec<Interval1D> {
    let pts: Vec<&Rational> = breaks.iter().collect();
    if pts.is_empty() {
        return vec![Interval1D::real_line()];
    }
    let mut out = vec![Interval1D::below(pts[0].clone(), false)];
    for (i, p) in pts.iter().enumerate() {
        out.push(Interval1D::point((*p).clone()));
        match pts.get(i + 1) {
            Some(next) => out.push(Interval1D::open((*p).clone(), (*next).clone()).expect("increasing")),
            None => out.push(Interval1D::above((*p).clone(), false)),
        }
    }
    out
}

/// Points `y` of `piece.interval` for which `(x, c)` fails the relation
/// against some covector of the piece.
///
/// The interval splits into `y < x`, `y = x`, `y > x`; on each part the
/// relation has a constant outcome, so the failure set is a union of parts.
pub fn failure_set(x: &Rational, c: &Atom, piece: &Piece, kind: PolarKind) -> Vec<(Interval1D, Atom)> {
    let mut out = Vec::new();
    let regions = [
        (piece.interval.part_below(x), std::cmp::Ordering::Greater),
        (piece.interval.part_above(x), std::cmp::Ordering::Less),
    ];
    for (region, sigma) in regions {
        let Some(region) = region else { continue };
        if let Some(v) = piece.values.atoms().into_iter().find(|v| !atoms_related(kind, sigma, c, v)) {
            out.push((region, v));
        }
    }
    out
}

fn first_failure(op: &PiecewiseOperator1D, x: &Rational, c: &Atom, kind: PolarKind) -> Option<(Pair, Pair)> {
    for piece in op.pieces_without_empty() {
        if let Some((region, v)) = failure_set(x, c, piece, kind).into_iter().next() {
            let y = region.sample();
            let w = instantiate_violation(kind, x, c, &y, &v).expect("failing atoms always admit a concrete violation");
            return Some(w);
        }
    }
    None
}

fn scalar_pair(candidate: &Pair) -> Result<(Rational, Rational)> {
    candidate.point.check_dim(1)?;
    Ok((candidate.point.as_scalar().unwrap().clone(), candidate.covector.as_scalar().unwrap().clone()))
}

/// Whether the 1-D `candidate` is pseudomonotonically related to every element of `piece`.
pub fn forall_piece_related(candidate: &Pair, piece: &Piece) -> Result<bool> {
    forall_piece_related_kind(candidate, piece, PolarKind::Pseudo)
}

pub fn forall_piece_related_kind(candidate: &Pair, piece: &Piece, kind: PolarKind) -> Result<bool> {
    let (x, c) = scalar_pair(candidate)?;
    Ok(failure_set(&x, &Atom::Point(c), piece, kind).is_empty())
}

/// Membership of `candidate` in the `kind` polar of `op`.
pub fn pw_polar_member(op: &PiecewiseOperator1D, candidate: &Pair, kind: PolarKind) -> Result<bool> {
    let (x, c) = scalar_pair(candidate)?;
    Ok(atom_member(op, &x, &Atom::Point(c), kind))
}

/// Whether every instance of `(x, c)` lies in the `kind` polar of `op`.
pub fn atom_member(op: &PiecewiseOperator1D, x: &Rational, c: &Atom, kind: PolarKind) -> bool {
    op.pieces_without_empty().all(|p| failure_set(x, c, p, kind).is_empty())
}

/// Like [`atom_member`], returning concrete violating pairs on failure.
pub fn atom_member_witness(op: &PiecewiseOperator1D, x: &Rational, c: &Atom, kind: PolarKind) -> Option<(Pair, Pair)> {
    first_failure(op, x, c, kind)
}

/// Whether all graph elements are mutually related under `kind`.
pub fn pw_is_class(op: &PiecewiseOperator1D, kind: PolarKind) -> PwVerdict {
    let witness = op.elements().into_iter().find_map(|(x, a)| first_failure(op, &x, &a, kind));
    PwVerdict::from_witness(witness)
}

pub fn pw_is_pseudomonotone(op: &PiecewiseOperator1D) -> PwVerdict {
    pw_is_class(op, PolarKind::Pseudo)
}

pub fn pw_classify(op: &PiecewiseOperator1D) -> PwClassification {
    PwClassification {
        monotone: pw_is_class(op, PolarKind::Mono),
        quasimonotone: pw_is_class(op, PolarKind::Quasi),
        pseudomonotone: pw_is_class(op, PolarKind::Pseudo),
    }
}

/// The fiber `T^kind(x)` for the sign-determined kinds.
pub fn pw_polar_fiber(op: &PiecewiseOperator1D, x: &Rational, kind: PolarKind) -> Result<Cone1D> {
    if kind == PolarKind::Mono {
        return Err(PolarError::Unsupported("monotone polar fibers are not cones".into()));
    }
    let test = |v: i64| atom_member(op, x, &Atom::Point(Rational::from_int(v)), kind);
    Ok(Cone1D::from_signs(test(-1), test(0), test(1)))
}

/// Builds a piecewise operator from per-cell value sets, merging neighbours
/// with identical images.
fn assemble(cells_and_values: Vec<(Interval1D, ValueSet1D)>) -> PiecewiseOperator1D {
    let mut pieces: Vec<Piece> = Vec::new();
    for (cell, values) in cells_and_values {
        if values.is_empty() {
            continue;
        }
        match pieces.last_mut() {
            Some(last) if last.values == values && last.interval.connects(&cell) => {
                last.interval = last.interval.hull(&cell);
            }
            _ => pieces.push(Piece::new(cell, values)),
        }
    }
    PiecewiseOperator1D { pieces }
}

/// The whole polar `T^rho` (or `T^nu`) as a piecewise operator.
///
/// The fiber only depends on which cell of the breakpoint partition `x`
/// belongs to, so one evaluation per cell is exact.
pub fn pw_polar(op: &PiecewiseOperator1D, kind: PolarKind) -> Result<PiecewiseOperator1D> {
    let mut out = Vec::new();
    for cell in cells(&op.breakpoints()) {
        let fiber = pw_polar_fiber(op, &cell.sample(), kind)?;
        out.push((cell, ValueSet1D::from_cone(&fiber)));
    }
    Ok(assemble(out))
}

/// `N_{L(T,x)}(x)` where `L(T,x) = {y : exists y* in T(y), (x - y) y* >= 0}`.
pub fn pw_normal_cone_of_l(op: &PiecewiseOperator1D, x: &Rational) -> Cone1D {
    let mut l_above = false;
    let mut l_below = false;
    for p in op.pieces_without_empty() {
        let atoms = p.values.atoms();
        // y > x needs y* <= 0, y < x needs y* >= 0
        if p.interval.part_above(x).is_some() && atoms.iter().any(|a| a.sign() != std::cmp::Ordering::Greater) {
            l_above = true;
        }
        if p.interval.part_below(x).is_some() && atoms.iter().any(|a| a.sign() != std::cmp::Ordering::Less) {
            l_below = true;
        }
    }
    Cone1D::from_signs(!l_below, true, !l_above)
}

/// The fiber of `T̂` at `x`.
pub fn pw_hat_fiber(op: &PiecewiseOperator1D, x: &Rational) -> ValueSet1D {
    let image = op.fiber(x);
    if image.contains_zero() {
        ValueSet1D::from_cone(&pw_normal_cone_of_l(op, x))
    } else {
        image.strict_conic_hull()
    }
}

/// `T̂` as a piecewise operator.
pub fn pw_hat(op: &PiecewiseOperator1D) -> PiecewiseOperator1D {
    let cells_and_values = cells(&op.breakpoints())
        .into_iter()
        .map(|cell| {
            let v = pw_hat_fiber(op, &cell.sample());
            (cell, v)
        })
        .collect();
    assemble(cells_and_values)
}

/// First element of `a` (restricted to `within`, if given) missing from `b`.
pub fn pw_missing(a: &PiecewiseOperator1D, b: &PiecewiseOperator1D, within: Option<&SolutionSet1D>) -> Option<Element> {
    let mut breaks = a.breakpoints();
    breaks.extend(b.breakpoints());
    if let Some(w) = within {
        for c in w.components() {
            breaks.extend(c.finite_endpoints().cloned());
        }
    }
    for cell in cells(&breaks) {
        let x = cell.sample();
        if within.is_some_and(|w| !w.contains(&x)) {
            continue;
        }
        if let Some(atom) = a.fiber(&x).missing_from(&b.fiber(&x)) {
            return Some((x, atom));
        }
    }
    None
}

pub fn pw_is_subset(a: &PiecewiseOperator1D, b: &PiecewiseOperator1D) -> bool {
    pw_missing(a, b, None).is_none()
}

pub fn pw_same_graph(a: &PiecewiseOperator1D, b: &PiecewiseOperator1D) -> bool {
    pw_is_subset(a, b) && pw_is_subset(b, a)
}

/// Exact D-maximality in 1-D: `T̂` equals its polar restricted to `dom(T)`.
///
/// The witness is an element of the restricted polar of `T̂` outside `T̂`,
/// instantiated with the ray generator when the element is a ray.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DMaxVerdict {
    pub d_maximal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Pair>,
}

pub fn pw_is_d_maximal(op: &PiecewiseOperator1D) -> Result<DMaxVerdict> {
    if !pw_is_pseudomonotone(op).holds {
        return Err(PolarError::NotPseudomonotone);
    }
    let hat = pw_hat(op);
    let hat_polar = pw_polar(&hat, PolarKind::Pseudo)?;
    let missing = pw_missing(&hat_polar, &hat, Some(&op.domain()));
    Ok(DMaxVerdict { d_maximal: missing.is_none(), witness: missing.map(|(x, a)| Pair::scalar(x, a.representative())) })
}
