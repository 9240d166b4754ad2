//! Maximal pseudomonotone extensions inside finite universes, the operator
//! `T̂` and D-maximality.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::conic::in_cone;
use crate::error::{PolarError, Result};
use crate::io::Operator;
use crate::operator::{is_class, related, FiniteOperator, Pair, PolarKind};
use crate::polar::{l_set, normal_cone_member, operator_polar_member, polar_member};
use crate::vector::{pairing, Vector};

/// A finite stand-in for `X × X*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Universe {
    dim: usize,
    candidates: Vec<Pair>,
}

impl Universe {
    pub fn new(dim: usize, candidates: Vec<Pair>) -> Result<Self> {
        if dim == 0 {
            return Err(PolarError::ZeroDimension);
        }
        for c in &candidates {
            c.point.check_dim(dim)?;
        }
        let mut seen = BTreeSet::new();
        let candidates = candidates.into_iter().filter(|c| seen.insert(c.clone())).collect();
        Ok(Universe { dim, candidates })
    }

    /// Every pairing of a point with a covector.
    pub fn grid(points: &[Vector], covectors: &[Vector]) -> Result<Self> {
        let dim = points.first().or(covectors.first()).map_or(1, Vector::dim);
        let mut out = Vec::new();
        for p in points {
            for c in covectors {
                out.push(Pair::new(p.clone(), c.clone())?);
            }
        }
        Universe::new(dim, out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn candidates(&self) -> &[Pair] {
        &self.candidates
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    /// Indices in lexicographic `(point, covector)` order.
    pub fn lex_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.candidates[a].cmp(&self.candidates[b]));
        idx
    }
}

impl<'de> Deserialize<'de> for Universe {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Grid {
            points: Vec<Vector>,
            covectors: Vec<Vector>,
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            dim: usize,
            #[serde(default)]
            candidates: Vec<Pair>,
            grid: Option<Grid>,
        }
        let raw = Raw::deserialize(d)?;
        let build = || -> Result<Universe> {
            let mut cands = raw.candidates;
            if let Some(g) = raw.grid {
                cands.extend(Universe::grid(&g.points, &g.covectors)?.candidates);
            }
            Universe::new(raw.dim, cands)
        };
        build().map_err(serde::de::Error::custom)
    }
}

fn require_pseudo(op: &FiniteOperator) -> Result<()> {
    if is_class(op, PolarKind::Pseudo) {
        Ok(())
    } else {
        Err(PolarError::NotPseudomonotone)
    }
}

fn check_universe(op: &FiniteOperator, u: &Universe) -> Result<()> {
    if op.dim() != u.dim() {
        return Err(PolarError::DimensionMismatch { expected: op.dim(), found: u.dim() });
    }
    Ok(())
}

/// Universe pairs whose addition keeps `op` pseudomonotone, i.e. `U ∩ T^rho`.
pub fn extension_candidates(op: &FiniteOperator, u: &Universe) -> Result<Vec<Pair>> {
    require_pseudo(op)?;
    check_universe(op, u)?;
    let mut out = Vec::new();
    for c in u.candidates() {
        if polar_member(op, c, PolarKind::Pseudo)? {
            out.push(c.clone());
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub extension: FiniteOperator,
    pub added: Vec<Pair>,
    pub maximal_in_universe: bool,
}

/// Scans the universe in `order`, keeping every pair compatible with what has been kept so far.
pub fn greedy_maximal_extension(op: &FiniteOperator, u: &Universe, order: &[usize]) -> Result<ExtensionReport> {
    require_pseudo(op)?;
    check_universe(op, u)?;
    let mut graph: Vec<Pair> = op.graph().to_vec();
    let mut added = Vec::new();
    for &i in order {
        let c = u
            .candidates()
            .get(i)
            .ok_or_else(|| PolarError::InvalidOrder(format!("index {i} outside universe of size {}", u.len())))?;
        if graph.contains(c) {
            continue;
        }
        if graph.iter().all(|g| related(c, g, PolarKind::Pseudo)) {
            graph.push(c.clone());
            added.push(c.clone());
        }
    }
    let maximal_in_universe =
        u.candidates().iter().all(|c| graph.contains(c) || !graph.iter().all(|g| related(c, g, PolarKind::Pseudo)));
    Ok(ExtensionReport { extension: FiniteOperator::new(op.dim(), graph)?, added, maximal_in_universe })
}

/// One-sided verdict of the pre-maximality probe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PremaxVerdict {
    /// Two sampled polar members are not related: the polar is not pseudomonotone.
    Falsified { witness: (Pair, Pair) },
    /// No violation among the sampled polar members. Not a proof.
    NoCounterexample { polar_members: usize },
}

impl PremaxVerdict {
    pub fn is_falsified(&self) -> bool {
        matches!(self, PremaxVerdict::Falsified { .. })
    }
}

pub fn is_premaximal_sampled(op: &Operator, sample: &Universe) -> Result<PremaxVerdict> {
    let mut members = Vec::new();
    for c in sample.candidates() {
        if operator_polar_member(op, c, PolarKind::Pseudo)? {
            members.push(c.clone());
        }
    }
    Ok(match crate::polar::mutual_violation(&members, PolarKind::Pseudo) {
        Some(witness) => PremaxVerdict::Falsified { witness },
        None => PremaxVerdict::NoCounterexample { polar_members: members.len() },
    })
}

/// `T̂` for a finite pseudomonotone `T`, accessed through membership.
#[derive(Clone, Debug)]
pub struct HatModel {
    base: FiniteOperator,
}

impl HatModel {
    pub fn new(base: FiniteOperator) -> Result<Self> {
        require_pseudo(&base)?;
        Ok(HatModel { base })
    }

    /// Skips the pseudomonotonicity check; membership is still well defined.
    pub fn unchecked(base: FiniteOperator) -> Self {
        HatModel { base }
    }

    pub fn base(&self) -> &FiniteOperator {
        &self.base
    }

    pub fn member(&self, x: &Vector, xstar: &Vector) -> Result<bool> {
        hat_member(self, x, xstar)
    }

    /// Whether `u` is pseudomonotonically related to every element of `T̂`.
    ///
    /// At a zero `x` of `T` the fiber is `N = N_{L(T,x)}(x)`. With
    /// `u = (z, w)` and `beta = <x - z, w>`: `beta < 0` relates `u` to all of
    /// `N`, `beta > 0` fails against `0 ∈ N`, and `beta = 0` needs
    /// `<z - x, c> <= 0` on `N`, i.e. `z - x ∈ cone(L - x)`.
    pub fn related_to_all(&self, u: &Pair) -> Result<bool> {
        u.point.check_dim(self.base.dim())?;
        for x in self.base.domain() {
            if self.base.is_zero_of(&x) {
                let beta = pairing(&x.sub(&u.point)?, &u.covector)?;
                if beta.is_negative() {
                    continue;
                }
                if beta.is_positive() {
                    return Ok(false);
                }
                let gens = l_set(&self.base, &x)?.iter().map(|y| y.sub(&x)).collect::<Result<Vec<_>>>()?;
                if !in_cone(&u.point.sub(&x)?, &gens)? {
                    return Ok(false);
                }
            } else {
                // the open rays through T(x) reduce to their generators
                for v in self.base.image(&x) {
                    if !related(u, &Pair::new(x.clone(), v.clone())?, PolarKind::Pseudo) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

pub fn hat_member(h: &HatModel, x: &Vector, xstar: &Vector) -> Result<bool> {
    let t = &h.base;
    x.check_dim(t.dim())?;
    xstar.check_dim(t.dim())?;
    if !t.in_domain(x) {
        return Ok(false);
    }
    if t.is_zero_of(x) {
        return normal_cone_member(&l_set(t, x)?, x, xstar, false);
    }
    Ok(t.image(x).iter().any(|v| xstar.positive_multiple_of(v).is_some()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DMaxReport {
    pub d_maximal: bool,
    /// A universe pair in `(T̂)^rho_D` but outside `T̂`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Pair>,
    pub checked: usize,
}

/// D-maximality of `T` relative to the universe pairs over `dom(T)`.
pub fn is_d_maximal(op: &FiniteOperator, u: &Universe) -> Result<DMaxReport> {
    check_universe(op, u)?;
    let h = HatModel::new(op.clone())?;
    let mut checked = 0;
    for c in u.candidates() {
        if !op.in_domain(&c.point) {
            continue;
        }
        checked += 1;
        if h.related_to_all(c)? && !hat_member(&h, &c.point, &c.covector)? {
            return Ok(DMaxReport { d_maximal: false, witness: Some(c.clone()), checked });
        }
    }
    Ok(DMaxReport { d_maximal: true, witness: None, checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::q;

    fn s(n: i64) -> Vector {
        Vector::from_ints(&[n])
    }

    fn grid_1d(points: &[i64], covs: &[i64]) -> Universe {
        let ps: Vec<Vector> = points.iter().map(|&p| s(p)).collect();
        let cs: Vec<Vector> = covs.iter().map(|&c| s(c)).collect();
        Universe::grid(&ps, &cs).unwrap()
    }

    #[test]
    fn extension_candidate_examples() {
        let t = FiniteOperator::from_scalar_ints(&[(0, -1)]).unwrap();
        let u = Universe::new(1, vec![Pair::ints(&[1], &[0]), Pair::ints(&[0], &[-1])]).unwrap();
        assert_eq!(extension_candidates(&t, &u).unwrap().len(), 2);
        let t = FiniteOperator::from_scalar_ints(&[(0, 1)]).unwrap();
        let u = Universe::new(1, vec![Pair::ints(&[1], &[0])]).unwrap();
        assert!(extension_candidates(&t, &u).unwrap().is_empty());
        assert!(matches!(extension_candidates(&fixtures::two_point(), &u), Err(PolarError::NotPseudomonotone)));
    }

    #[test]
    fn greedy_on_own_graph_is_identity() {
        let t = fixtures::dmax_example();
        let u = Universe::new(1, t.graph().to_vec()).unwrap();
        let r = greedy_maximal_extension(&t, &u, &u.lex_order()).unwrap();
        assert!(r.added.is_empty());
        assert!(r.maximal_in_universe);
    }

    #[test]
    fn two_orders_give_two_maximal_families() {
        let t = fixtures::dmax_example();
        let u = grid_1d(&[0, 1], &[-2, -1, 0, 1, 2]);
        let lex = greedy_maximal_extension(&t, &u, &u.lex_order()).unwrap();
        // the S-like family: nonpositive covectors at 0, nonnegative at 1
        let expected: BTreeSet<Pair> =
            [(0, -2), (0, -1), (0, 0), (1, 0), (1, 1), (1, 2)].iter().map(|&(x, v)| Pair::ints(&[x], &[v])).collect();
        assert_eq!(lex.extension.graph().iter().cloned().collect::<BTreeSet<_>>(), expected);

        // putting (1, -1) first forces 0 out at x = 0 and gives the T̂-like family
        let first = u.candidates().iter().position(|c| *c == Pair::ints(&[1], &[-1])).unwrap();
        let mut order = vec![first];
        order.extend(u.lex_order().into_iter().filter(|&i| i != first));
        let hat = greedy_maximal_extension(&t, &u, &order).unwrap();
        let expected: BTreeSet<Pair> = [(0, -2), (0, -1), (1, -2), (1, -1), (1, 0), (1, 1), (1, 2)]
            .iter()
            .map(|&(x, v)| Pair::ints(&[x], &[v]))
            .collect();
        assert_eq!(hat.extension.graph().iter().cloned().collect::<BTreeSet<_>>(), expected);
        assert!(hat.maximal_in_universe && lex.maximal_in_universe);
    }

    #[test]
    fn hat_member_examples() {
        let h = HatModel::new(fixtures::dmax_example()).unwrap();
        for c in [-3, 0, 5] {
            assert!(hat_member(&h, &s(1), &s(c)).unwrap());
        }
        assert!(hat_member(&h, &s(0), &s(-2)).unwrap());
        assert!(!hat_member(&h, &s(0), &s(1)).unwrap());
        assert!(!hat_member(&h, &s(0), &s(0)).unwrap());
        assert!(!hat_member(&h, &s(2), &s(0)).unwrap());
    }

    #[test]
    fn d_maximal_example() {
        let t = fixtures::dmax_example();
        let covs: Vec<Vector> = (-6..=6).map(|n| Vector::scalar(q(n, 2))).collect();
        let u = Universe::grid(&[s(0), s(1)], &covs).unwrap();
        let r = is_d_maximal(&t, &u).unwrap();
        assert!(r.d_maximal, "{r:?}");
        // (0, 0) is not related to (1, v) for v < 0
        let h = HatModel::new(t).unwrap();
        assert!(!h.related_to_all(&Pair::ints(&[0], &[0])).unwrap());
    }

    #[test]
    fn closed_ejem1_sample_is_not_d_maximal() {
        // finite slice of the closed-half-line example, including the double image at 0
        let t = FiniteOperator::from_scalar_ints(&[(-1, -1), (0, -1), (0, 1), (1, 1)]).unwrap();
        let u = grid_1d(&[-1, 0, 1], &[-1, 0, 1]);
        let r = is_d_maximal(&t, &u).unwrap();
        assert!(!r.d_maximal);
        assert_eq!(r.witness, Some(Pair::ints(&[0], &[0])));
    }

    #[test]
    fn related_to_all_in_the_plane() {
        // T = {((0,0),(0,0)), ((1,0),(1,0))}: zero at the origin, L = {0} ∪ ...
        let t = FiniteOperator::new(2, vec![Pair::ints(&[0, 0], &[0, 0]), Pair::ints(&[1, 0], &[1, 0])]).unwrap();
        let h = HatModel::new(t.clone()).unwrap();
        // brute force over a covector grid at the origin fiber
        let grid: Vec<Vector> = (-2..=2).flat_map(|a| (-2..=2).map(move |b| Vector::from_ints(&[a, b]))).collect();
        let origin = Vector::from_ints(&[0, 0]);
        for z in [[0, 1], [1, 1], [-1, 0], [2, 0], [0, 0]] {
            for w in &grid {
                let u = Pair::new(Vector::from_ints(&z), w.clone()).unwrap();
                let brute = grid.iter().all(|c| {
                    !hat_member(&h, &origin, c).unwrap()
                        || related(&u, &Pair::new(origin.clone(), c.clone()).unwrap(), PolarKind::Pseudo)
                }) && related(&u, &t.graph()[1], PolarKind::Pseudo);
                let exact = h.related_to_all(&u).unwrap();
                // the grid can only miss violations
                if exact {
                    assert!(brute, "u={u:?}");
                }
            }
        }
    }

    #[test]
    fn premax_probe() {
        let u = grid_1d(&[-2, -1, 0, 1, 2], &[-2, -1, 0, 1, 2]);
        let ejem1: Operator = fixtures::ejem1().into();
        assert!(!is_premaximal_sampled(&ejem1, &u).unwrap().is_falsified());
        let zero: Operator = fixtures::real_line_zero().into();
        assert!(!is_premaximal_sampled(&zero, &u).unwrap().is_falsified());
        let two: Operator = fixtures::two_point().into();
        let v = is_premaximal_sampled(&two, &u).unwrap();
        let PremaxVerdict::Falsified { witness: (a, b) } = v else { panic!("{v:?}") };
        assert!(!related(&a, &b, PolarKind::Pseudo));
    }

    #[test]
    fn universe_json_forms() {
        let u: Universe = serde_json::from_str(
            r#"{"dim":1,"grid":{"points":[["0"],["1"]],"covectors":[["-1"],["0"]]},"candidates":[{"x":["0"],"xs":["-1"]}]}"#,
        )
        .unwrap();
        assert_eq!(u.len(), 4);
        assert!(serde_json::from_str::<Universe>(r#"{"dim":2,"candidates":[{"x":["0"],"xs":["1"]}]}"#).is_err());
    }
}
