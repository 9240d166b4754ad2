//! JSON documents accepted and produced by the command line.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{PolarError, Result};
use crate::maximality::Universe;
use crate::model1d::{Interval1D, PiecewiseOperator1D};
use crate::operator::{FiniteOperator, Pair};
use crate::vector::Vector;

/// Either kind of operator, tagged by `"kind"` on the wire.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Operator {
    Finite(FiniteOperator),
    Pw1d(PiecewiseOperator1D),
}

impl Operator {
    pub fn dim(&self) -> usize {
        match self {
            Operator::Finite(t) => t.dim(),
            Operator::Pw1d(_) => 1,
        }
    }

    /// The operator as a piecewise 1-D operator, when it is one-dimensional.
    pub fn to_pw(&self) -> Result<PiecewiseOperator1D> {
        match self {
            Operator::Finite(t) => PiecewiseOperator1D::from_finite(t),
            Operator::Pw1d(t) => Ok(t.clone()),
        }
    }
}

impl From<FiniteOperator> for Operator {
    fn from(t: FiniteOperator) -> Self {
        Operator::Finite(t)
    }
}

impl From<PiecewiseOperator1D> for Operator {
    fn from(t: PiecewiseOperator1D) -> Self {
        Operator::Pw1d(t)
    }
}

/// A constraint set `K`: finitely many points, or an interval of the line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstraintSet {
    Finite(Vec<Vector>),
    Interval(Interval1D),
}

impl ConstraintSet {
    pub fn finite(points: Vec<Vector>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(PolarError::EmptyConstraintSet);
        };
        let dim = first.dim();
        for p in &points {
            p.check_dim(dim)?;
        }
        let mut points = points;
        points.sort();
        points.dedup();
        Ok(ConstraintSet::Finite(points))
    }

    pub fn dim(&self) -> usize {
        match self {
            ConstraintSet::Finite(ps) => ps[0].dim(),
            ConstraintSet::Interval(_) => 1,
        }
    }
}

impl<'de> Deserialize<'de> for ConstraintSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(rename_all = "lowercase", deny_unknown_fields)]
        enum Raw {
            Finite(Vec<Vector>),
            Interval(Interval1D),
        }
        match Raw::deserialize(d)? {
            Raw::Finite(ps) => ConstraintSet::finite(ps).map_err(serde::de::Error::custom),
            Raw::Interval(i) => Ok(ConstraintSet::Interval(i)),
        }
    }
}

/// A universe on the wire: explicit candidates, or every point paired with every covector.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum UniverseDoc {
    Candidates { dim: usize, candidates: Vec<Pair> },
    Grid { points: Vec<Vector>, covectors: Vec<Vector> },
}

impl UniverseDoc {
    pub fn build(self) -> Result<Universe> {
        match self {
            UniverseDoc::Candidates { dim, candidates } => Universe::new(dim, candidates),
            UniverseDoc::Grid { points, covectors } => Universe::grid(&points, &covectors),
        }
    }
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(PolarError::from)
}

/// Reads `arg` as inline JSON when it looks like JSON, otherwise as a file path.
pub fn read_json_arg<T: for<'de> Deserialize<'de>>(arg: &str) -> Result<T> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return parse_json(arg);
    }
    let text =
        std::fs::read_to_string(Path::new(arg)).map_err(|e| PolarError::Parse(format!("cannot read {arg}: {e}")))?;
    parse_json(&text)
}
