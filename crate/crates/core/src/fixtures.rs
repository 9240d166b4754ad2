//! The worked examples, as ready-made operators.

use crate::io::Operator;
use crate::model1d::{Direction, Interval1D, Piece, PiecewiseOperator1D, ValueSet1D};
use crate::operator::FiniteOperator;
use crate::rational::{q, Rational};

fn zero() -> Rational {
    Rational::zero()
}

fn pw(pieces: Vec<(Interval1D, ValueSet1D)>) -> PiecewiseOperator1D {
    PiecewiseOperator1D::new(pieces.into_iter().map(|(i, v)| Piece::new(i, v)).collect())
}

fn rays(ds: &[Direction]) -> ValueSet1D {
    ValueSet1D::new([], ds.iter().copied())
}

/// `(R × {0}) ∪ {(0, 1)}`: quasimonotone, not pseudomonotone.
pub fn ejem_variational() -> PiecewiseOperator1D {
    pw(vec![
        (Interval1D::real_line(), ValueSet1D::point(zero())),
        (Interval1D::point(zero()), ValueSet1D::point(q(1, 1))),
    ])
}

/// Its pseudomonotone polar `{(x, 0) : x <= 0}`.
pub fn ejem_variational_polar() -> PiecewiseOperator1D {
    pw(vec![(Interval1D::below(zero(), true), ValueSet1D::point(zero()))])
}

/// `(R- × {-1}) ∪ (R+ × {1})` with closed half-lines, so `T(0) = {-1, 1}`.
pub fn ejem1() -> PiecewiseOperator1D {
    pw(vec![
        (Interval1D::below(zero(), true), ValueSet1D::point(q(-1, 1))),
        (Interval1D::above(zero(), true), ValueSet1D::point(q(1, 1))),
    ])
}

/// The same operator on open half-lines; 0 is outside the domain.
pub fn ejem1_open() -> PiecewiseOperator1D {
    pw(vec![
        (Interval1D::below(zero(), false), ValueSet1D::point(q(-1, 1))),
        (Interval1D::above(zero(), false), ValueSet1D::point(q(1, 1))),
    ])
}

/// `{(x, x*) : x x* > 0 or x = 0}`.
pub fn ejem1_polar() -> PiecewiseOperator1D {
    pw(vec![
        (Interval1D::below(zero(), false), rays(&[Direction::Neg])),
        (Interval1D::point(zero()), ValueSet1D::new([zero()], [Direction::Neg, Direction::Pos])),
        (Interval1D::above(zero(), false), rays(&[Direction::Pos])),
    ])
}

/// `{(0, 1), (1, 0)}`.
pub fn two_point() -> FiniteOperator {
    FiniteOperator::from_scalar_ints(&[(0, 1), (1, 0)]).expect("valid")
}

/// `(]-inf, 0] × R-) ∪ ([1, +inf[ × R++)`.
pub fn two_point_polar() -> PiecewiseOperator1D {
    pw(vec![
        (Interval1D::below(zero(), true), ValueSet1D::new([zero()], [Direction::Neg])),
        (Interval1D::above(q(1, 1), true), rays(&[Direction::Pos])),
    ])
}

/// `{(0, -1), (1, 0)}`: pseudomonotone and D-maximal, not monotone.
pub fn dmax_example() -> FiniteOperator {
    FiniteOperator::from_scalar_ints(&[(0, -1), (1, 0)]).expect("valid")
}

/// `R × {0}`.
pub fn real_line_zero() -> PiecewiseOperator1D {
    pw(vec![(Interval1D::real_line(), ValueSet1D::point(zero()))])
}

/// All of `R × R`.
pub fn whole_plane() -> PiecewiseOperator1D {
    pw(vec![(Interval1D::real_line(), ValueSet1D::new([zero()], [Direction::Neg, Direction::Pos]))])
}

pub const FIXTURE_IDS: [&str; 10] = [
    "ejem-variational",
    "ejem-variational-polar",
    "ejem1",
    "ejem1-open",
    "ejem1-polar",
    "two-point",
    "two-point-polar",
    "dmax-example",
    "real-line-zero",
    "whole-plane",
];

pub fn fixture(id: &str) -> Option<Operator> {
    let id = id.rsplit('/').next()?;
    let id = id.strip_suffix(".json").unwrap_or(id).replace('_', "-");
    let id = match id.strip_prefix("ejem43") {
        Some(rest) => format!("ejem-variational{rest}"),
        None => id,
    };
    Some(match id.as_str() {
        "ejem-variational" => ejem_variational().into(),
        "ejem-variational-polar" => ejem_variational_polar().into(),
        "ejem1" => ejem1().into(),
        "ejem1-open" => ejem1_open().into(),
        "ejem1-polar" => ejem1_polar().into(),
        "two-point" => two_point().into(),
        "two-point-polar" => two_point_polar().into(),
        "dmax-example" => dmax_example().into(),
        "real-line-zero" => real_line_zero().into(),
        "whole-plane" => whole_plane().into(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_id_resolves() {
        for id in FIXTURE_IDS {
            assert!(fixture(id).is_some(), "{id}");
        }
        assert!(fixture("nope").is_none());
        assert!(fixture("two_point.json").is_some());
        assert_eq!(fixture("ejem43_polar.json"), fixture("ejem-variational-polar"));
    }
}
