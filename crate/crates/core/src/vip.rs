//! Stampacchia (`S(T, K)`) and Minty (`M(T, K)`) variational inequalities.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{PolarError, Result};
use crate::io::{ConstraintSet, Operator};
use crate::model1d::{pw_polar, Endpoint, Interval1D, PiecewiseOperator1D, SolutionSet1D};
use crate::operator::{classify, FiniteOperator, Pair, PolarKind};
use crate::polar::{mono_fiber_1d, polar_member, PointSet};
use crate::rational::Rational;
use crate::vector::{pairing, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub enum Which {
    S,
    M,
}

impl std::str::FromStr for Which {
    type Err = PolarError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Which::S),
            "M" | "m" => Ok(Which::M),
            other => Err(PolarError::Parse(format!("expected S or M, got {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Solutions {
    Points(PointSet),
    Set(SolutionSet1D),
}

impl Solutions {
    pub fn is_empty(&self) -> bool {
        match self {
            Solutions::Points(p) => p.is_empty(),
            Solutions::Set(s) => s.is_empty(),
        }
    }

    pub fn points(&self) -> Option<&PointSet> {
        match self {
            Solutions::Points(p) => Some(p),
            Solutions::Set(_) => None,
        }
    }

    pub fn is_subset_of(&self, other: &Solutions) -> bool {
        match (self, other) {
            (Solutions::Points(a), Solutions::Points(b)) => a.iter().all(|p| b.contains(p)),
            (Solutions::Set(a), Solutions::Set(b)) => a.is_subset_of(b),
            _ => false,
        }
    }
}

/// A VIP solution set. SVIP results also name a certifying covector per solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VipResult {
    pub solutions: Solutions,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Pair>,
    /// Set when emptiness claims are only relative to a finite covector sample.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub sampled: bool,
}

impl VipResult {
    fn points(points: PointSet, witnesses: Vec<Pair>) -> Self {
        VipResult { solutions: Solutions::Points(points), witnesses, sampled: false }
    }

    fn set(set: SolutionSet1D) -> Self {
        VipResult { solutions: Solutions::Set(set), witnesses: Vec::new(), sampled: false }
    }

    pub fn point_set(&self) -> Option<&PointSet> {
        self.solutions.points()
    }
}

fn check_dims(op: &Operator, k: &ConstraintSet) -> Result<()> {
    if op.dim() != k.dim() {
        return Err(PolarError::DimensionMismatch { expected: op.dim(), found: k.dim() });
    }
    Ok(())
}

/// `<y - x, x*> >= 0` for every `y` of a finite `K`.
fn stampacchia_ok(k: &[Vector], x: &Vector, xstar: &Vector) -> bool {
    k.iter().all(|y| !pairing(&y.sub(x).expect("dims"), xstar).expect("dims").is_negative())
}

fn scalar(v: &Vector) -> &Rational {
    v.as_scalar().expect("1-D")
}

pub fn svip(op: &Operator, k: &ConstraintSet) -> Result<VipResult> {
    check_dims(op, k)?;
    match (op, k) {
        (Operator::Finite(t), ConstraintSet::Finite(ks)) => Ok(svip_finite(t, ks)),
        (Operator::Pw1d(t), ConstraintSet::Finite(ks)) => Ok(svip_pw_points(t, ks)),
        (_, ConstraintSet::Interval(i)) => Ok(VipResult::set(svip_pw_interval(&op.to_pw()?, i))),
    }
}

pub fn mvip(op: &Operator, k: &ConstraintSet) -> Result<VipResult> {
    check_dims(op, k)?;
    match (op, k) {
        (Operator::Finite(t), ConstraintSet::Finite(ks)) => Ok(mvip_finite(t, ks)),
        (Operator::Pw1d(t), ConstraintSet::Finite(ks)) => Ok(mvip_pw_points(t, ks)),
        (_, ConstraintSet::Interval(i)) => Ok(VipResult::set(mvip_pw_interval(&op.to_pw()?, i))),
    }
}

pub fn solve(op: &Operator, k: &ConstraintSet, which: Which) -> Result<VipResult> {
    match which {
        Which::S => svip(op, k),
        Which::M => mvip(op, k),
    }
}

pub fn svip_finite(t: &FiniteOperator, k: &[Vector]) -> VipResult {
    let mut sols = Vec::new();
    let mut wit = Vec::new();
    for x in k {
        if let Some(v) = t.image(x).into_iter().find(|v| stampacchia_ok(k, x, v)) {
            sols.push(x.clone());
            wit.push(Pair::new(x.clone(), v.clone()).expect("dims"));
        }
    }
    VipResult::points(sols, wit)
}

pub fn mvip_finite(t: &FiniteOperator, k: &[Vector]) -> VipResult {
    let sols = k
        .iter()
        .filter(|x| {
            t.graph()
                .iter()
                .filter(|g| k.contains(&g.point))
                .all(|g| !pairing(&x.sub(&g.point).expect("dims"), &g.covector).expect("dims").is_positive())
        })
        .cloned()
        .collect();
    VipResult::points(sols, Vec::new())
}

fn svip_pw_points(t: &PiecewiseOperator1D, k: &[Vector]) -> VipResult {
    let mut sols = Vec::new();
    let mut wit = Vec::new();
    for x in k {
        let atoms = t.fiber(scalar(x)).atoms();
        // rays reduce to their generator: the inequality is positively homogeneous
        if let Some(a) = atoms.iter().find(|a| stampacchia_ok(k, x, &Vector::scalar(a.representative()))) {
            sols.push(x.clone());
            wit.push(Pair::scalar(scalar(x).clone(), a.representative()));
        }
    }
    VipResult::points(sols, wit)
}

fn mvip_pw_points(t: &PiecewiseOperator1D, k: &[Vector]) -> VipResult {
    let sols = k
        .iter()
        .filter(|x| {
            k.iter().all(|y| {
                let d = scalar(x) - scalar(y);
                t.fiber(scalar(y)).atoms().iter().all(|a| (&d * &a.representative()).sign() != Ordering::Greater)
            })
        })
        .cloned()
        .collect();
    VipResult::points(sols, Vec::new())
}

/// Exact `S(T, K)` for an interval `K`. A zero covector always certifies;
/// a positive one needs `x = min K`, a negative one `x = max K`.
pub fn svip_pw_interval(t: &PiecewiseOperator1D, k: &Interval1D) -> SolutionSet1D {
    let mut parts = t.zeros().intersect_interval(k).components().to_vec();
    let ends = [(k.lo(), Ordering::Greater), (k.hi(), Ordering::Less)];
    for (end, sign) in ends {
        if let (Some(x), true) = (end.value.finite(), end.closed) {
            if t.fiber(x).atoms().iter().any(|a| a.sign() == sign) {
                parts.push(Interval1D::point(x.clone()));
            }
        }
    }
    SolutionSet1D::new(parts)
}

/// Exact `M(T, K)` for an interval `K`: each piece contributes `x <= inf J`
/// (positive covectors) or `x >= sup J` (negative ones) where `J = I ∩ K`.
pub fn mvip_pw_interval(t: &PiecewiseOperator1D, k: &Interval1D) -> SolutionSet1D {
    let mut current = Some(k.clone());
    for p in t.pieces() {
        let Some(j) = p.interval.intersect(k) else { continue };
        for a in p.values.atoms() {
            let Some(cur) = current.take() else { return SolutionSet1D::empty() };
            let constraint = match a.sign() {
                Ordering::Equal => Some(Interval1D::real_line()),
                Ordering::Greater => j.lo().value.finite().map(|l| Interval1D::below(l.clone(), true)),
                Ordering::Less => j.hi().value.finite().map(|h| Interval1D::above(h.clone(), true)),
            };
            current = constraint.and_then(|c| cur.intersect(&c));
        }
    }
    current.map_or_else(SolutionSet1D::empty, SolutionSet1D::from_interval)
}

/// Covector candidates for certificates in dimension >= 2: zero, all of
/// `T`'s covectors, `±(y - x)` for `y ∈ K`, pairwise sums of those, and the
/// integer box `[-1, 1]^n`.
pub fn candidate_covectors(t: &FiniteOperator, k: &[Vector], x: &Vector) -> Vec<Vector> {
    let n = t.dim();
    let mut base: BTreeSet<Vector> = BTreeSet::new();
    base.insert(Vector::zero(n));
    for g in t.graph() {
        base.insert(g.covector.clone());
    }
    for y in k {
        let d = y.sub(x).expect("dims");
        base.insert(d.neg());
        base.insert(d);
    }
    let list: Vec<Vector> = base.iter().cloned().collect();
    for i in 0..list.len() {
        for j in (i + 1)..list.len() {
            base.insert(list[i].add(&list[j]).expect("dims"));
        }
    }
    let mut boxed = vec![Vec::new()];
    for _ in 0..n {
        boxed =
            boxed.into_iter().flat_map(|c: Vec<i64>| (-1..=1).map(move |v| [c.clone(), vec![v]].concat())).collect();
    }
    for c in boxed {
        base.insert(Vector::from_ints(&c));
    }
    base.into_iter().collect()
}

/// `S(T^kind, K)` or `M(T^kind, K)` for a finite `K`. Exact on the line;
/// sampled (and flagged) in higher dimension.
pub fn polar_vip(op: &Operator, k: &[Vector], kind: PolarKind, which: Which) -> Result<VipResult> {
    if k.is_empty() {
        return Err(PolarError::EmptyConstraintSet);
    }
    for p in k {
        p.check_dim(op.dim())?;
    }
    if op.dim() == 1 {
        return polar_vip_1d(&op.to_pw()?, k, kind, which);
    }
    let Operator::Finite(t) = op else { unreachable!("piecewise operators are 1-D") };
    let mut result = match which {
        Which::S => {
            let mut sols = Vec::new();
            let mut wit = Vec::new();
            for x in k {
                for c in candidate_covectors(t, k, x) {
                    let pair = Pair::new(x.clone(), c.clone())?;
                    if stampacchia_ok(k, x, &c) && polar_member(t, &pair, kind)? {
                        sols.push(x.clone());
                        wit.push(pair);
                        break;
                    }
                }
            }
            VipResult::points(sols, wit)
        }
        Which::M => {
            let mut sols = Vec::new();
            'x: for x in k {
                for y in k {
                    for c in candidate_covectors(t, k, y) {
                        let pair = Pair::new(y.clone(), c.clone())?;
                        if pairing(&x.sub(y)?, &c)?.is_positive() && polar_member(t, &pair, kind)? {
                            continue 'x;
                        }
                    }
                }
                sols.push(x.clone());
            }
            VipResult::points(sols, Vec::new())
        }
    };
    result.sampled = true;
    Ok(result)
}

/// Exact polar VIPs on the line. `T^rho` and `T^nu` are materialized;
/// `T^mu(x)` is the closed covector interval from [`mono_fiber_1d`].
fn polar_vip_1d(t: &PiecewiseOperator1D, k: &[Vector], kind: PolarKind, which: Which) -> Result<VipResult> {
    if kind != PolarKind::Mono {
        let polar: Operator = pw_polar(t, kind)?.into();
        return solve(&polar, &ConstraintSet::finite(k.to_vec())?, which);
    }
    let ks: Vec<&Rational> = k.iter().map(scalar).collect();
    match which {
        Which::S => {
            let mut sols = Vec::new();
            let mut wit = Vec::new();
            for x in k {
                let xv = scalar(x);
                let Some(fiber) = mono_fiber_1d(t, xv) else { continue };
                // K to the right forces x* >= 0, K to the left x* <= 0
                let mut allowed = fiber;
                if ks.iter().any(|y| *y > xv) {
                    match allowed.intersect(&Interval1D::above(Rational::zero(), true)) {
                        Some(i) => allowed = i,
                        None => continue,
                    }
                }
                if ks.iter().any(|y| *y < xv) {
                    match allowed.intersect(&Interval1D::below(Rational::zero(), true)) {
                        Some(i) => allowed = i,
                        None => continue,
                    }
                }
                sols.push(x.clone());
                wit.push(Pair::scalar(xv.clone(), allowed.sample()));
            }
            Ok(VipResult::points(sols, wit))
        }
        Which::M => {
            let sols = k
                .iter()
                .filter(|x| {
                    let xv = scalar(x);
                    ks.iter().all(|y| match mono_fiber_1d(t, y) {
                        None => true,
                        // y > x needs every c >= 0, y < x every c <= 0
                        Some(f) => match (*y).cmp(xv) {
                            Ordering::Greater => lower_at_least_zero(f.lo()),
                            Ordering::Less => upper_at_most_zero(f.hi()),
                            Ordering::Equal => true,
                        },
                    })
                })
                .cloned()
                .collect();
            Ok(VipResult::points(sols, Vec::new()))
        }
    }
}

fn lower_at_least_zero(e: &Endpoint) -> bool {
    e.value.finite().is_some_and(|l| !l.is_negative())
}

fn upper_at_most_zero(e: &Endpoint) -> bool {
    e.value.finite().is_some_and(|h| !h.is_positive())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JohnReport {
    pub pseudomonotone: bool,
    #[serde(rename = "all_K_hold")]
    pub all_k_hold: bool,
    /// The two sides agree, as the theorem requires.
    pub holds: bool,
    /// First `K` and a point of `S(T, K) \ M(T, K)`, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_k: Option<JohnWitness>,
    pub subsets_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JohnWitness {
    pub k: PointSet,
    pub point: Vector,
}

pub const JOHN_DEFAULT_MAX_DOM: usize = 12;

/// Compares "`S(T,K) ⊂ M(T,K)` for every nonempty `K ⊂ dom(T)`" with pseudomonotonicity.
pub fn john_equivalence(t: &FiniteOperator, max_dom: usize) -> Result<JohnReport> {
    let dom = t.domain();
    if dom.len() > max_dom {
        return Err(PolarError::DomainTooLarge { size: dom.len(), limit: max_dom });
    }
    let mut failing_k = None;
    let mut checked = 0;
    for mask in 1u64..(1u64 << dom.len()) {
        let k: Vec<Vector> = (0..dom.len()).filter(|i| mask >> i & 1 == 1).map(|i| dom[i].clone()).collect();
        checked += 1;
        let s = svip_finite(t, &k);
        let m = mvip_finite(t, &k);
        let m_pts = m.point_set().expect("finite");
        if let Some(x) = s.point_set().expect("finite").iter().find(|x| !m_pts.contains(x)) {
            failing_k = Some(JohnWitness { k, point: x.clone() });
            break;
        }
    }
    let pseudomonotone = classify(t).pseudomonotone;
    let all_k_hold = failing_k.is_none();
    Ok(JohnReport {
        pseudomonotone,
        all_k_hold,
        holds: pseudomonotone == all_k_hold,
        failing_k,
        subsets_checked: checked,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inclusion {
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub holds: bool,
    /// Whether the inclusion is guaranteed for this operator.
    pub required: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossReport {
    pub s_t: Solutions,
    pub m_t: Solutions,
    pub s_rho: Solutions,
    pub m_rho: Solutions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_mu: Option<Solutions>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_mu: Option<Solutions>,
    pub pseudomonotone: bool,
    pub monotone: bool,
    pub inclusions: Vec<Inclusion>,
    pub sampled: bool,
    /// Every required inclusion holds.
    pub pass: bool,
}

/// All VIP solution sets of `T` and its polars on `K`, with the inclusion
/// matrix checked against the diagram that applies to `T`.
pub fn cross_inclusions(op: &Operator, k: &ConstraintSet) -> Result<CrossReport> {
    check_dims(op, k)?;
    let (monotone, pseudomonotone) = match op {
        Operator::Finite(t) => {
            let c = classify(t);
            (c.monotone, c.pseudomonotone)
        }
        Operator::Pw1d(t) => {
            let c = crate::model1d::pw_classify(t);
            (c.monotone.holds, c.pseudomonotone.holds)
        }
    };
    let s_t = svip(op, k)?;
    let m_t = mvip(op, k)?;
    let (s_rho, m_rho, s_mu, m_mu) = match k {
        ConstraintSet::Finite(ks) => {
            let s_rho = polar_vip(op, ks, PolarKind::Pseudo, Which::S)?;
            let m_rho = polar_vip(op, ks, PolarKind::Pseudo, Which::M)?;
            let s_mu = polar_vip(op, ks, PolarKind::Mono, Which::S)?;
            let m_mu = polar_vip(op, ks, PolarKind::Mono, Which::M)?;
            (s_rho, m_rho, Some(s_mu), Some(m_mu))
        }
        ConstraintSet::Interval(_) => {
            let polar: Operator = pw_polar(&op.to_pw()?, PolarKind::Pseudo)?.into();
            (svip(&polar, k)?, mvip(&polar, k)?, None, None)
        }
    };
    let sampled = s_rho.sampled || m_rho.sampled;
    let mut inclusions = Vec::new();
    let mut inc = |lhs: &'static str, a: &VipResult, rhs: &'static str, b: &VipResult, required: bool| {
        inclusions.push(Inclusion { lhs, rhs, holds: a.solutions.is_subset_of(&b.solutions), required });
    };
    inc("S(T^rho,K)", &s_rho, "M(T,K)", &m_t, true);
    inc("S(T,K)", &s_t, "M(T^rho,K)", &m_rho, true);
    inc("S(T,K)", &s_t, "S(T^rho,K)", &s_rho, pseudomonotone);
    inc("M(T^rho,K)", &m_rho, "M(T,K)", &m_t, pseudomonotone);
    if let (Some(s_mu), Some(m_mu)) = (&s_mu, &m_mu) {
        inc("S(T,K)", &s_t, "S(T^mu,K)", s_mu, monotone);
        inc("S(T^mu,K)", s_mu, "S(T^rho,K)", &s_rho, true);
        inc("M(T^rho,K)", &m_rho, "M(T^mu,K)", m_mu, true);
        inc("M(T^mu,K)", m_mu, "M(T,K)", &m_t, monotone);
    }
    let pass = inclusions.iter().all(|i| i.holds || !i.required);
    Ok(CrossReport {
        s_t: s_t.solutions,
        m_t: m_t.solutions,
        s_rho: s_rho.solutions,
        m_rho: m_rho.solutions,
        s_mu: s_mu.map(|r| r.solutions),
        m_mu: m_mu.map(|r| r.solutions),
        pseudomonotone,
        monotone,
        inclusions,
        sampled,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::q;

    fn pts(ns: &[i64]) -> Vec<Vector> {
        ns.iter().map(|&n| Vector::from_ints(&[n])).collect()
    }

    fn finite_k(ns: &[i64]) -> ConstraintSet {
        ConstraintSet::finite(pts(ns)).unwrap()
    }

    fn line() -> ConstraintSet {
        ConstraintSet::Interval(Interval1D::real_line())
    }

    #[test]
    fn strictness_examples() {
        let ejem1: Operator = fixtures::ejem1().into();
        assert_eq!(svip(&ejem1, &line()).unwrap().solutions, Solutions::Set(SolutionSet1D::empty()));
        let polar: Operator = fixtures::ejem1_polar().into();
        assert_eq!(mvip(&polar, &line()).unwrap().solutions, Solutions::Set(SolutionSet1D::from_points([&q(0, 1)])));

        let var: Operator = fixtures::ejem_variational().into();
        let var_polar: Operator = fixtures::ejem_variational_polar().into();
        assert!(svip(&var_polar, &finite_k(&[1, 2])).unwrap().solutions.is_empty());
        assert_eq!(mvip(&var, &finite_k(&[1, 2])).unwrap().point_set().unwrap(), &pts(&[1, 2]));
        // the polar computed from the operator agrees with the fixture
        assert!(polar_vip(&var, &pts(&[1, 2]), PolarKind::Pseudo, Which::S).unwrap().solutions.is_empty());
    }

    #[test]
    fn whole_space_specialization() {
        let ejem1: Operator = fixtures::ejem1().into();
        assert_eq!(
            mvip(&ejem1, &line()).unwrap().solutions,
            Solutions::Set(crate::polar::pw_zero_polar_set(&fixtures::ejem1()))
        );
        let var: Operator = fixtures::ejem_variational().into();
        assert_eq!(svip(&var, &line()).unwrap().solutions, Solutions::Set(SolutionSet1D::real_line()));
    }

    #[test]
    fn svip_interval_endpoints() {
        let t: Operator = PiecewiseOperator1D::from_finite(&fixtures::two_point()).unwrap().into();
        let k = ConstraintSet::Interval(Interval1D::closed(q(0, 1), q(1, 1)).unwrap());
        // x = 0 with x* = 1 > 0 at the left end, x = 1 is a zero
        assert_eq!(svip(&t, &k).unwrap().solutions, Solutions::Set(SolutionSet1D::from_points([&q(0, 1), &q(1, 1)])));
        let open =
            ConstraintSet::Interval(Interval1D::new(Endpoint::open(q(0, 1)), Endpoint::closed(q(1, 1))).unwrap());
        assert_eq!(svip(&t, &open).unwrap().solutions, Solutions::Set(SolutionSet1D::from_points([&q(1, 1)])));
    }

    #[test]
    fn finite_interval_agreement() {
        // finite K inside an interval: the interval solver restricted to K's points
        let t = fixtures::two_point();
        let k = pts(&[0, 1]);
        assert_eq!(svip_finite(&t, &k).point_set().unwrap(), &pts(&[0, 1]));
        assert_eq!(mvip_finite(&t, &k).point_set().unwrap(), &pts(&[0]));
    }

    #[test]
    fn john_examples() {
        let r = john_equivalence(&fixtures::two_point(), JOHN_DEFAULT_MAX_DOM).unwrap();
        assert!(!r.pseudomonotone && !r.all_k_hold && r.holds);
        assert_eq!(r.failing_k, Some(JohnWitness { k: pts(&[0, 1]), point: Vector::from_ints(&[1]) }));
        let single = FiniteOperator::from_scalar_ints(&[(0, 1)]).unwrap();
        let r = john_equivalence(&single, JOHN_DEFAULT_MAX_DOM).unwrap();
        assert!(r.pseudomonotone && r.all_k_hold && r.holds);
        let big = FiniteOperator::from_scalar_ints(&(0..13).map(|i| (i, 0)).collect::<Vec<_>>()).unwrap();
        assert!(matches!(john_equivalence(&big, 12), Err(PolarError::DomainTooLarge { .. })));
    }

    #[test]
    fn nu_polar_svip_is_everything() {
        let t: Operator = fixtures::two_point().into();
        let k = pts(&[-1, 0, 1, 3]);
        assert_eq!(polar_vip(&t, &k, PolarKind::Quasi, Which::S).unwrap().point_set().unwrap(), &k);
    }

    #[test]
    fn cross_report_fixtures() {
        let ejem1: Operator = fixtures::ejem1().into();
        let r = cross_inclusions(&ejem1, &line()).unwrap();
        assert!(r.pass);
        assert!(r.s_t.is_empty());
        assert_eq!(r.m_rho, Solutions::Set(SolutionSet1D::from_points([&q(0, 1)])));

        let var: Operator = fixtures::ejem_variational().into();
        let r = cross_inclusions(&var, &finite_k(&[1, 2])).unwrap();
        assert!(r.pass && !r.pseudomonotone);
        assert!(r.s_rho.is_empty());

        let d: Operator = fixtures::dmax_example().into();
        let r = cross_inclusions(&d, &finite_k(&[0, 1])).unwrap();
        assert!(r.monotone && r.pass, "{r:?}");
    }

    #[test]
    fn sampled_flag_in_the_plane() {
        let t: Operator = FiniteOperator::new(2, vec![Pair::ints(&[0, 0], &[1, 0])]).unwrap().into();
        let k = vec![Vector::from_ints(&[0, 0]), Vector::from_ints(&[1, 1])];
        let r = polar_vip(&t, &k, PolarKind::Pseudo, Which::S).unwrap();
        assert!(r.sampled);
    }
}
