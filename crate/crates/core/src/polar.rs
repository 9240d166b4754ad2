//! Polar membership for finite and piecewise operators, the auxiliary point
//! sets `V_T(x)`, `W_T(x)`, `L(T, x)` and normal cones.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{PolarError, Result};
use crate::io::Operator;
use crate::model1d::{Atom, Cone1D, Endpoint, Interval1D, PiecewiseOperator1D, SolutionSet1D};
use crate::operator::{relate, related, FiniteOperator, Pair, PolarKind};
use crate::rational::Rational;
use crate::vector::{pairing, Vector};

/// A finite, sorted, duplicate-free set of points.
pub type PointSet = Vec<Vector>;

fn check_candidate(op: &FiniteOperator, candidate: &Pair) -> Result<()> {
    candidate.point.check_dim(op.dim())
}

pub fn polar_member(op: &FiniteOperator, candidate: &Pair, kind: PolarKind) -> Result<bool> {
    check_candidate(op, candidate)?;
    Ok(op.graph().iter().all(|g| related(candidate, g, kind)))
}

/// Polar membership for either operator representation.
pub fn operator_polar_member(op: &Operator, candidate: &Pair, kind: PolarKind) -> Result<bool> {
    match op {
        Operator::Finite(t) => polar_member(t, candidate, kind),
        Operator::Pw1d(t) => crate::model1d::pw_polar_member(t, candidate, kind),
    }
}

fn points_where(op: &FiniteOperator, x: &Vector, keep: impl Fn(Ordering) -> bool) -> Result<PointSet> {
    x.check_dim(op.dim())?;
    let mut out = BTreeSet::new();
    for g in op.graph() {
        let s = pairing(&x.sub(&g.point)?, &g.covector)?;
        if keep(s.sign()) {
            out.insert(g.point.clone());
        }
    }
    Ok(out.into_iter().collect())
}

/// `V_T(x) = {y : exists y* in T(y), <x - y, y*> > 0}`.
pub fn v_set(op: &FiniteOperator, x: &Vector) -> Result<PointSet> {
    points_where(op, x, |s| s == Ordering::Greater)
}

/// `W_T(x) = {y : exists y* in T(y), <x - y, y*> = 0}`.
pub fn w_set(op: &FiniteOperator, x: &Vector) -> Result<PointSet> {
    points_where(op, x, |s| s == Ordering::Equal)
}

/// `L(T, x) = {y : exists y* in T(y), <x - y, y*> >= 0}`.
pub fn l_set(op: &FiniteOperator, x: &Vector) -> Result<PointSet> {
    points_where(op, x, |s| s != Ordering::Less)
}

/// `x* in N_C(x)` (or the strict cone `N°_C(x)` when `strict`). Empty `C` gives everything.
pub fn normal_cone_member(c: &[Vector], x: &Vector, xstar: &Vector, strict: bool) -> Result<bool> {
    xstar.check_dim(x.dim())?;
    for y in c {
        let s = pairing(&y.sub(x)?, xstar)?;
        let ok = if strict { s.is_negative() } else { !s.is_positive() };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pseudomonotone polar membership via `T^rho(x) = N°_{V_T(x)}(x) ∩ N_{W_T(x)}(x)`.
pub fn polar_member_via_cones(op: &FiniteOperator, candidate: &Pair) -> Result<bool> {
    check_candidate(op, candidate)?;
    let (x, xs) = (&candidate.point, &candidate.covector);
    Ok(normal_cone_member(&v_set(op, x)?, x, xs, true)? && normal_cone_member(&w_set(op, x)?, x, xs, false)?)
}

/// `(x, 0) in T^rho`, decided as the half-space intersection `<x - y, y*> <= 0` over the graph.
pub fn zero_polar_member(op: &FiniteOperator, x: &Vector) -> Result<bool> {
    x.check_dim(op.dim())?;
    for g in op.graph() {
        if pairing(&x.sub(&g.point)?, &g.covector)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The same half-space test for a piecewise operator: every point of a
/// piece left of `x` needs nonpositive covectors, every point right of `x`
/// nonnegative ones.
pub fn pw_zero_polar_member(op: &PiecewiseOperator1D, x: &Rational) -> bool {
    op.pieces().iter().all(|p| {
        let atoms = p.values.atoms();
        let below_ok = p.interval.part_below(x).is_none() || atoms.iter().all(|a| a.sign() != Ordering::Greater);
        let above_ok = p.interval.part_above(x).is_none() || atoms.iter().all(|a| a.sign() != Ordering::Less);
        below_ok && above_ok
    })
}

/// `Z_{T^rho}` of a piecewise operator, exactly.
pub fn pw_zero_polar_set(op: &PiecewiseOperator1D) -> SolutionSet1D {
    SolutionSet1D::new(
        crate::model1d::cells(&op.breakpoints()).into_iter().filter(|c| pw_zero_polar_member(op, &c.sample())),
    )
}

pub fn operator_zero_polar_member(op: &Operator, x: &Vector) -> Result<bool> {
    match op {
        Operator::Finite(t) => zero_polar_member(t, x),
        Operator::Pw1d(t) => {
            x.check_dim(1)?;
            Ok(pw_zero_polar_member(t, x.as_scalar().unwrap()))
        }
    }
}

/// `T^rho(x)` (or `T^nu(x)`) on the line.
pub fn polar_fiber_1d(op: &Operator, x: &Rational, kind: PolarKind) -> Result<Cone1D> {
    if op.dim() != 1 {
        return Err(PolarError::DimensionMismatch { expected: 1, found: op.dim() });
    }
    crate::model1d::pw_polar_fiber(&op.to_pw()?, x, kind)
}

/// `N_C(x)` (or `N°_C(x)`) for a finite `C` on the line, as a cone.
pub fn normal_cone_1d(c: &[Rational], x: &Rational, strict: bool) -> Cone1D {
    let above = c.iter().any(|y| y > x);
    let below = c.iter().any(|y| y < x);
    let at = c.iter().any(|y| y == x);
    if strict && at {
        return Cone1D::EMPTY;
    }
    // y > x forces x* <= 0 (x* < 0 when strict), y < x forces x* >= 0
    let zero = !(strict && (above || below));
    Cone1D::from_signs(!below, zero, !above)
}

/// `T^rho(x)` for a 1-D finite operator assembled from the normal cones.
pub fn polar_fiber_via_cones_1d(op: &FiniteOperator, x: &Rational) -> Result<Cone1D> {
    let xv = Vector::scalar(x.clone());
    let scalars = |ps: PointSet| ps.iter().map(|p| p.as_scalar().expect("1-D").clone()).collect::<Vec<_>>();
    let v = scalars(v_set(op, &xv)?);
    let w = scalars(w_set(op, &xv)?);
    Ok(normal_cone_1d(&v, x, true).intersect(&normal_cone_1d(&w, x, false)))
}

/// `T^mu(x)` on the line: the closed covector interval
/// `[sup of values left of x, inf of values right of x]`, or `None` when empty.
pub fn mono_fiber_1d(op: &PiecewiseOperator1D, x: &Rational) -> Option<Interval1D> {
    let mut lo = Endpoint::neg_inf();
    let mut hi = Endpoint::pos_inf();
    let zero = Rational::zero();
    for p in op.pieces() {
        for a in p.values.atoms() {
            // an open ray bounds the fiber by its supremum (or infimum), which is 0
            if p.interval.part_below(x).is_some() {
                let v = match &a {
                    Atom::Point(v) => v,
                    Atom::Ray(d) if d.sign() == Ordering::Greater => return None,
                    Atom::Ray(_) => &zero,
                };
                if lo.value.finite().is_none_or(|l| v > l) {
                    lo = Endpoint::closed(v.clone());
                }
            }
            if p.interval.part_above(x).is_some() {
                let v = match &a {
                    Atom::Point(v) => v,
                    Atom::Ray(d) if d.sign() == Ordering::Less => return None,
                    Atom::Ray(_) => &zero,
                };
                if hi.value.finite().is_none_or(|h| v < h) {
                    hi = Endpoint::closed(v.clone());
                }
            }
        }
    }
    Interval1D::new(lo, hi).ok()
}

/// `rho_U(A)`: indices of universe pairs related under `kind` to every pair indexed by `a`.
pub fn relative_polar(universe: &[Pair], a: &BTreeSet<usize>, kind: PolarKind) -> BTreeSet<usize> {
    (0..universe.len()).filter(|&u| a.iter().all(|&i| related(&universe[u], &universe[i], kind))).collect()
}

/// Universe pairs lying in the `kind` polar of `op`.
pub fn polar_within(op: &Operator, universe: &[Pair], kind: PolarKind) -> Result<Vec<Pair>> {
    let mut out = Vec::new();
    for u in universe {
        if operator_polar_member(op, u, kind)? {
            out.push(u.clone());
        }
    }
    Ok(out)
}

/// First pair of `pairs` that fails the relation with another, if any.
pub fn mutual_violation(pairs: &[Pair], kind: PolarKind) -> Option<(Pair, Pair)> {
    crate::operator::first_violation(pairs, kind)
}

/// Whether `candidate` is related to every pair of a list.
pub fn related_to_all(pairs: &[Pair], candidate: &Pair, kind: PolarKind) -> Result<bool> {
    for p in pairs {
        if !relate(candidate, p)?.holds(kind) {
            return Ok(false);
        }
    }
    Ok(true)
}
