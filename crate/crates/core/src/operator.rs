//! Graph pairs, finite operators and the three pairwise relations
//! (monotone, quasimonotone, pseudomonotone) everything else is built on.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PolarError, Result};
use crate::rational::Rational;
use crate::vector::{pairing, Vector};

/// A graph element `(x, x*)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Pair {
    #[serde(rename = "x")]
    pub point: Vector,
    #[serde(rename = "xs")]
    pub covector: Vector,
}

impl Pair {
    pub fn new(point: Vector, covector: Vector) -> Result<Self> {
        covector.check_dim(point.dim())?;
        Ok(Pair { point, covector })
    }

    /// Convenience constructor for 1-D pairs with integer coordinates.
    pub fn ints(point: &[i64], covector: &[i64]) -> Self {
        Pair::new(Vector::from_ints(point), Vector::from_ints(covector)).expect("matching dimensions")
    }

    pub fn scalar(point: Rational, covector: Rational) -> Self {
        Pair { point: Vector::scalar(point), covector: Vector::scalar(covector) }
    }

    pub fn dim(&self) -> usize {
        self.point.dim()
    }
}

impl<'de> Deserialize<'de> for Pair {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            x: Vector,
            xs: Vector,
        }
        let raw = Raw::deserialize(deserializer)?;
        Pair::new(raw.x, raw.xs).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.point, self.covector)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Which of the three relations (and hence which polar) is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolarKind {
    /// Monotone relation, polar `T^mu`.
    #[serde(alias = "mu")]
    Mono,
    /// Pseudomonotone relation, polar `T^rho`.
    #[serde(alias = "rho")]
    Pseudo,
    /// Quasimonotone relation, polar `T^nu`.
    #[serde(alias = "nu")]
    Quasi,
}

impl PolarKind {
    pub const ALL: [PolarKind; 3] = [PolarKind::Mono, PolarKind::Pseudo, PolarKind::Quasi];

    pub fn symbol(self) -> &'static str {
        match self {
            PolarKind::Mono => "mu",
            PolarKind::Pseudo => "rho",
            PolarKind::Quasi => "nu",
        }
    }
}

impl std::str::FromStr for PolarKind {
    type Err = PolarError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mu" | "mono" | "monotone" => Ok(PolarKind::Mono),
            "rho" | "pseudo" | "pseudomonotone" => Ok(PolarKind::Pseudo),
            "nu" | "quasi" | "quasimonotone" => Ok(PolarKind::Quasi),
            other => Err(PolarError::Parse(format!("unknown polar kind {other:?}"))),
        }
    }
}

/// Outcome of comparing two pairs `p = (x, x*)` and `q = (y, y*)`.
///
/// `a = <x - y, y*>` and `b = <y - x, x*>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationVerdict {
    pub a: Rational,
    pub b: Rational,
    pub mono: bool,
    pub quasi: bool,
    pub pseudo: bool,
}

impl RelationVerdict {
    pub fn from_products(a: Rational, b: Rational) -> Self {
        let mono = !(&a + &b).is_positive();
        let quasi = !a.is_positive() || !b.is_positive();
        let pseudo = a.is_negative() || b.is_negative() || (a.is_zero() && b.is_zero());
        RelationVerdict { a, b, mono, quasi, pseudo }
    }

    pub fn holds(&self, kind: PolarKind) -> bool {
        match kind {
            PolarKind::Mono => self.mono,
            PolarKind::Pseudo => self.pseudo,
            PolarKind::Quasi => self.quasi,
        }
    }
}

pub fn relate(p: &Pair, q: &Pair) -> Result<RelationVerdict> {
    q.point.check_dim(p.dim())?;
    let a = pairing(&p.point.sub(&q.point)?, &q.covector)?;
    let b = pairing(&q.point.sub(&p.point)?, &p.covector)?;
    Ok(RelationVerdict::from_products(a, b))
}

/// `relate(p, q).holds(kind)` for pairs already known to share a dimension.
pub(crate) fn related(p: &Pair, q: &Pair, kind: PolarKind) -> bool {
    relate(p, q).expect("pairs of equal dimension").holds(kind)
}

/// A multivalued operator given by a finite graph in `Q^n x Q^n`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct FiniteOperator {
    dim: usize,
    graph: Vec<Pair>,
}

impl FiniteOperator {
    pub fn new(dim: usize, graph: Vec<Pair>) -> Result<Self> {
        if dim == 0 {
            return Err(PolarError::ZeroDimension);
        }
        let mut seen = BTreeSet::new();
        for p in &graph {
            p.point.check_dim(dim)?;
            if !seen.insert(p) {
                return Err(PolarError::DuplicatePair(p.to_string()));
            }
        }
        Ok(FiniteOperator { dim, graph })
    }

    pub fn empty(dim: usize) -> Self {
        FiniteOperator::new(dim, Vec::new()).expect("positive dimension")
    }

    /// Builds a 1-D operator from integer `(x, x*)` pairs.
    pub fn from_scalar_ints(pairs: &[(i64, i64)]) -> Result<Self> {
        FiniteOperator::new(1, pairs.iter().map(|&(x, v)| Pair::ints(&[x], &[v])).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn graph(&self) -> &[Pair] {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn contains(&self, pair: &Pair) -> bool {
        self.graph.contains(pair)
    }

    /// The distinct points of the graph, sorted.
    pub fn domain(&self) -> Vec<Vector> {
        let set: BTreeSet<&Vector> = self.graph.iter().map(|p| &p.point).collect();
        set.into_iter().cloned().collect()
    }

    pub fn in_domain(&self, x: &Vector) -> bool {
        self.graph.iter().any(|p| &p.point == x)
    }

    /// `T(x)` as a list of covectors.
    pub fn image(&self, x: &Vector) -> Vec<&Vector> {
        self.graph.iter().filter(|p| &p.point == x).map(|p| &p.covector).collect()
    }

    /// `Z_T`, the points whose image contains the zero covector.
    pub fn zeros(&self) -> Vec<Vector> {
        let set: BTreeSet<&Vector> = self.graph.iter().filter(|p| p.covector.is_zero()).map(|p| &p.point).collect();
        set.into_iter().cloned().collect()
    }

    pub fn is_zero_of(&self, x: &Vector) -> bool {
        self.graph.iter().any(|p| &p.point == x && p.covector.is_zero())
    }

    /// `T ∪ {pair}`; a pair already present is not duplicated.
    pub fn with_pair(&self, pair: Pair) -> Result<Self> {
        pair.point.check_dim(self.dim)?;
        let mut graph = self.graph.clone();
        if !graph.contains(&pair) {
            graph.push(pair);
        }
        Ok(FiniteOperator { dim: self.dim, graph })
    }

    /// Graph restricted to points in `points`.
    pub fn restrict(&self, points: &[Vector]) -> Self {
        let graph = self.graph.iter().filter(|p| points.contains(&p.point)).cloned().collect();
        FiniteOperator { dim: self.dim, graph }
    }

    /// Whether every pair of `self` belongs to `other`.
    pub fn is_subset_of(&self, other: &FiniteOperator) -> bool {
        self.graph.iter().all(|p| other.contains(p))
    }
}

impl fmt::Debug for FiniteOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.graph).finish()
    }
}

impl<'de> Deserialize<'de> for FiniteOperator {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            dim: usize,
            graph: Vec<Pair>,
        }
        let raw = Raw::deserialize(deserializer)?;
        FiniteOperator::new(raw.dim, raw.graph).map_err(serde::de::Error::custom)
    }
}

/// Result of [`classify`]: one flag per class, with a violating pair when a flag is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub monotone: bool,
    pub quasimonotone: bool,
    pub pseudomonotone: bool,
    pub witness: ClassWitnesses,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassWitnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monotone: Option<(Pair, Pair)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quasimonotone: Option<(Pair, Pair)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudomonotone: Option<(Pair, Pair)>,
}

impl Classification {
    pub fn holds(&self, kind: PolarKind) -> bool {
        match kind {
            PolarKind::Mono => self.monotone,
            PolarKind::Pseudo => self.pseudomonotone,
            PolarKind::Quasi => self.quasimonotone,
        }
    }
}

pub fn classify(op: &FiniteOperator) -> Classification {
    let mut witness = ClassWitnesses::default();
    let g = op.graph();
    for i in 0..g.len() {
        for j in (i + 1)..g.len() {
            let v = relate(&g[i], &g[j]).expect("graph pairs share the operator dimension");
            let pair = || (g[i].clone(), g[j].clone());
            if !v.mono && witness.monotone.is_none() {
                witness.monotone = Some(pair());
            }
            if !v.quasi && witness.quasimonotone.is_none() {
                witness.quasimonotone = Some(pair());
            }
            if !v.pseudo && witness.pseudomonotone.is_none() {
                witness.pseudomonotone = Some(pair());
            }
        }
    }
    Classification {
        monotone: witness.monotone.is_none(),
        quasimonotone: witness.quasimonotone.is_none(),
        pseudomonotone: witness.pseudomonotone.is_none(),
        witness,
    }
}

/// Whether all pairs of `op` are related under `kind`; cheaper than a full [`classify`].
pub fn is_class(op: &FiniteOperator, kind: PolarKind) -> bool {
    first_violation(op.graph(), kind).is_none()
}

pub(crate) fn first_violation(pairs: &[Pair], kind: PolarKind) -> Option<(Pair, Pair)> {
    for i in 0..pairs.len() {
        for j in (i + 1)..pairs.len() {
            if !related(&pairs[i], &pairs[j], kind) {
                return Some((pairs[i].clone(), pairs[j].clone()));
            }
        }
    }
    None
}

/// The linear perturbation `T + alpha`.
pub fn translate(op: &FiniteOperator, alpha: &Vector) -> Result<FiniteOperator> {
    alpha.check_dim(op.dim())?;
    let graph = op
        .graph()
        .iter()
        .map(|p| Ok(Pair { point: p.point.clone(), covector: p.covector.add(alpha)? }))
        .collect::<Result<Vec<_>>>()?;
    FiniteOperator::new(op.dim(), graph)
}

/// Multiplies the i-th covector by `factors[i] > 0`.
pub fn scale_covectors(op: &FiniteOperator, factors: &[Rational]) -> Result<FiniteOperator> {
    if factors.len() != op.len() {
        return Err(PolarError::FactorCount { expected: op.len(), found: factors.len() });
    }
    if let Some(bad) = factors.iter().find(|f| !f.is_positive()) {
        return Err(PolarError::NonPositiveFactor(bad.to_string()));
    }
    let mut graph: Vec<Pair> = Vec::with_capacity(op.len());
    for (p, f) in op.graph().iter().zip(factors) {
        let scaled = Pair { point: p.point.clone(), covector: p.covector.scale(f) };
        // two covectors on the same ray may collapse onto one pair
        if !graph.contains(&scaled) {
            graph.push(scaled);
        }
    }
    FiniteOperator::new(op.dim(), graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn p(x: i64, v: i64) -> Pair {
        Pair::ints(&[x], &[v])
    }

    #[test]
    fn relate_examples() {
        let v = relate(&p(0, 1), &p(1, 0)).unwrap();
        assert_eq!((v.a.clone(), v.b.clone()), (q(0, 1), q(1, 1)));
        assert!(!v.pseudo);
        assert!(v.quasi);

        let v = relate(&p(0, -1), &p(1, 0)).unwrap();
        assert_eq!(v.b, q(-1, 1));
        assert!(v.pseudo);

        for pair in [p(0, 0), p(3, -2), Pair::ints(&[1, 2], &[3, 4])] {
            assert!(relate(&pair, &pair).unwrap().pseudo);
        }
    }

    #[test]
    fn relate_dimension_mismatch() {
        assert!(matches!(relate(&p(0, 1), &Pair::ints(&[0, 0], &[1, 1])), Err(PolarError::DimensionMismatch { .. })));
    }

    #[test]
    fn classify_examples() {
        let two = FiniteOperator::from_scalar_ints(&[(0, 1), (1, 0)]).unwrap();
        let c = classify(&two);
        assert!(!c.pseudomonotone);
        assert!(c.quasimonotone);
        assert!(c.witness.pseudomonotone.is_some());

        let zeros = FiniteOperator::from_scalar_ints(&[(-1, 0), (0, 0), (1, 0)]).unwrap();
        let c = classify(&zeros);
        assert!(c.monotone && c.quasimonotone && c.pseudomonotone);

        let hat = FiniteOperator::from_scalar_ints(&[(0, -1), (1, 0)]).unwrap();
        let c = classify(&hat);
        // <0 - 1, -1 - 0> = 1 >= 0, so this one is even monotone
        assert!(c.pseudomonotone);
        assert!(c.monotone);
        assert_eq!(c.witness.monotone, None);

        let bent = FiniteOperator::from_scalar_ints(&[(0, 1), (1, -1)]).unwrap();
        let c = classify(&bent);
        assert!(!c.monotone && !c.pseudomonotone && !c.quasimonotone);
    }

    #[test]
    fn duplicates_rejected_but_multivalued_allowed() {
        assert!(matches!(FiniteOperator::from_scalar_ints(&[(0, 1), (0, 1)]), Err(PolarError::DuplicatePair(_))));
        let multi = FiniteOperator::from_scalar_ints(&[(0, 1), (0, 2)]).unwrap();
        assert_eq!(multi.domain().len(), 1);
        assert_eq!(multi.image(&Vector::from_ints(&[0])).len(), 2);
    }

    #[test]
    fn translate_examples() {
        let t = FiniteOperator::from_scalar_ints(&[(0, 0)]).unwrap();
        let one = Vector::from_ints(&[1]);
        assert_eq!(translate(&t, &one).unwrap(), FiniteOperator::from_scalar_ints(&[(0, 1)]).unwrap());

        let t = FiniteOperator::from_scalar_ints(&[(0, -1), (1, 0)]).unwrap();
        let shifted = translate(&t, &one).unwrap();
        assert_eq!(shifted, FiniteOperator::from_scalar_ints(&[(0, 0), (1, 1)]).unwrap());
        assert_eq!(translate(&shifted, &one.neg()).unwrap(), t);
        assert!(translate(&t, &Vector::from_ints(&[1, 1])).is_err());
    }

    #[test]
    fn scale_examples() {
        let t = FiniteOperator::from_scalar_ints(&[(0, 1)]).unwrap();
        assert_eq!(scale_covectors(&t, &[q(1, 1)]).unwrap(), t);
        assert_eq!(scale_covectors(&t, &[q(3, 1)]).unwrap(), FiniteOperator::from_scalar_ints(&[(0, 3)]).unwrap());
        assert!(matches!(scale_covectors(&t, &[q(0, 1)]), Err(PolarError::NonPositiveFactor(_))));
        assert!(matches!(scale_covectors(&t, &[]), Err(PolarError::FactorCount { .. })));
    }

    #[test]
    fn operator_json_shape() {
        let t = FiniteOperator::from_scalar_ints(&[(0, 1), (1, 0)]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"dim":1,"graph":[{"x":["0"],"xs":["1"]},{"x":["1"],"xs":["0"]}]}"#);
        let back: FiniteOperator = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<FiniteOperator>(r#"{"dim":2,"graph":[{"x":["0"],"xs":["1"]}]}"#).is_err());
    }
}
