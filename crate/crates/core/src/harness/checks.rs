//! The check registry. Each randomized check builds an instance from a
//! [`Gen`] and reports whether the statement held on it.

use std::collections::BTreeSet;

use serde_json::json;

use super::{Body, CheckDef, Gen, Trial};
use crate::error::Result;
use crate::fixtures;
use crate::io::{ConstraintSet, Operator};
use crate::maximality::{greedy_maximal_extension, hat_member, is_d_maximal, HatModel, Universe};
use crate::model1d::{
    cells, pw_classify, pw_hat, pw_is_class, pw_is_d_maximal, pw_is_pseudomonotone, pw_is_subset, pw_polar,
    pw_polar_fiber, pw_polar_member, pw_same_graph, Cone1D, Interval1D, Piece, PiecewiseOperator1D, SolutionSet1D,
    ValueSet1D,
};
use crate::operator::{
    classify, is_class, relate, related, scale_covectors, translate, FiniteOperator, Pair, PolarKind,
};
use crate::polar::{
    mono_fiber_1d, normal_cone_1d, normal_cone_member, polar_fiber_1d, polar_fiber_via_cones_1d, polar_member,
    polar_member_via_cones, pw_zero_polar_member, pw_zero_polar_set, relative_polar, v_set, w_set, zero_polar_member,
    PointSet,
};
use crate::rational::Rational;
use crate::vector::Vector;
use crate::vip::{
    cross_inclusions, john_equivalence, mvip, mvip_finite, mvip_pw_interval, polar_vip, svip, svip_finite,
    svip_pw_interval, Which,
};

use PolarKind::{Mono, Pseudo, Quasi};

type Pw = PiecewiseOperator1D;

const ZORN: &str = "existence over all extensions replaced by exhaustive search in a finite universe";
const SAMPLED: &str = "polar solution sets in dimension 2 and up are computed over a finite covector sample";

macro_rules! check {
    ($name:literal, $stmt:literal, $gen:literal, $trials:expr, $f:expr) => {
        CheckDef {
            name: $name,
            statement: $stmt,
            generator: $gen,
            default_trials: $trials,
            caveat: None,
            body: Body::Random($f),
        }
    };
    ($name:literal, $stmt:literal, $gen:literal, $trials:expr, $f:expr, caveat = $c:expr) => {
        CheckDef {
            name: $name,
            statement: $stmt,
            generator: $gen,
            default_trials: $trials,
            caveat: Some($c),
            body: Body::Random($f),
        }
    };
}

macro_rules! fixed {
    ($name:literal, $stmt:literal, $f:expr) => {
        CheckDef {
            name: $name,
            statement: $stmt,
            generator: "fixture",
            default_trials: 1,
            caveat: None,
            body: Body::Fixed($f),
        }
    };
    ($name:literal, $stmt:literal, $f:expr, caveat = $c:expr) => {
        CheckDef {
            name: $name,
            statement: $stmt,
            generator: "fixture",
            default_trials: 1,
            caveat: Some($c),
            body: Body::Fixed($f),
        }
    };
}

macro_rules! skipped {
    ($name:literal, $stmt:literal, $reason:literal) => {
        CheckDef {
            name: $name,
            statement: $stmt,
            generator: "none",
            default_trials: 0,
            caveat: None,
            body: Body::Skipped($reason),
        }
    };
}

pub(super) static REGISTRY: &[CheckDef] = &[
    // pairwise relations
    check!("REL-SYM", "the three relations are reflexive and symmetric; monotone implies pseudomonotone implies quasimonotone",
        "random pairs, dims 1-3", 10_000, rel_sym),
    check!("REL-SEG", "weak transitivity: (x,x*)~(z,z*) and (z,z*)~(y,y*) with z in [x,y] give (x,x*)~(y,y*)",
        "random triples on a segment, dims 1-3", 10_000, rel_seg),
    check!("REL-SCALE", "(x,x*) in T^rho and (y,y*) in T give (x,tx*)~(y,sy*) for t,s>0",
        "random finite T and polar members, dims 1-3", 10_000, rel_scale),
    // polars
    check!("POLAR-SANDWICH", "T^mu ⊂ T^rho ⊂ T^nu", "random finite T and candidates, dims 1-3", 10_000, polar_sandwich),
    check!("POLAR-GALOIS", "rho is a polarity: unions go to intersections, T ⊂ T^rhorho, T^rhorhorho = T^rho, antitone",
        "finite universes |U| <= 10", 1_000, polar_galois),
    check!("POLAR-EMPTY-FULL", "the polar of the empty operator is everything and the polar of X×X* is empty",
        "random candidates, dims 1-3", 2_000, polar_empty_full),
    check!("POLAR-MIXED", "T^{rho mu} ⊂ T^{mu mu} ⊂ T^{mu rho} and T^{rho mu} ⊂ T^{rho rho} ⊂ T^{mu rho}",
        "finite universes |U| <= 10", 1_000, polar_mixed),
    check!("ZERO-SINGLETON", "{(x,0)}^rho = {(x,0)}^mu, and R×{0} is its own polar",
        "random candidates, dims 1-3", 2_000, zero_singleton),
    check!("ZERO-CONVEX", "the zeros of T^rho form a convex set, closed on the line",
        "random finite T dims 1-3 and random pw1d", 500, zero_convex),
    skipped!("ZERO-WEAK-CLOSED", "the zeros of T^rho form a weak-closed set",
        "topological: weak-closedness is out of scope beyond convexity"),
    check!("ZERO-MU-RHO", "Z_{T^mu} = Z_{T^rho}", "random finite T dims 1-3 and random pw1d", 2_000, zero_mu_rho),
    check!("CONE-INV", "cone°(T)^rho = T^rho = cone°(T^rho)", "random finite T dims 1-3 and random pw1d", 2_000, cone_inv),
    check!("FIBER-CONVEX", "every fiber T^rho(x) is convex", "random finite T dims 2-3", 1_000, fiber_convex),
    fixed!("FIX-CLOSURE", "the closure of (R×{0})^rho is R×{0}, strictly smaller than (R×{0})^nu = R²", fix_closure),
    check!("TRHOGEN-ORACLE", "T^rho(x) = N°_{V_T(x)}(x) ∩ N_{W_T(x)}(x)",
        "random finite T |graph| <= 6, dims 1-3", 10_000, trhogen_oracle),
    check!("TRHOZERO-EQUIV", "V_T(x) empty ⟺ x in Z_{T^rho} ⟺ T^rho(x) = N_{W_T(x)}(x)",
        "random finite T dims 1-3", 2_000, trhozero_equiv),
    skipped!("TRHOZERO-WEAKSTAR", "x in dom T^rho with T^rho(x) weak*-closed ⟺ x in Z_{T^rho}",
        "topological: weak*-closedness of T^rho(x) is out of scope"),
    // pseudomonotone operators
    check!("PSEUDO-EQUIV", "T pseudomonotone ⟺ T ⊂ T^rho ⟺ T^rhorho ⊂ T^rho ⟺ T^rhorho pseudomonotone ⟺ cone°(T) pseudomonotone",
        "random finite T dims 1-3 with universes, random pw1d", 1_000, pseudo_equiv),
    check!("EXT-ONE", "for pseudomonotone T, (x,x*) in T^rho ⟺ T ∪ {(x,x*)} is pseudomonotone",
        "random pseudomonotone finite T dims 1-3", 5_000, ext_one),
    fixed!("FIX-VARIATIONAL", "(R×{0}) ∪ {(0,1)} has T^nu = {x <= 0 or x* >= 0} and monotone T^rho = {(x,0): x <= 0}", fix_variational),
    check!("ZERO-HULL", "for pseudomonotone T, the closed convex hull of Z_T lies in Z_{T^rho}",
        "random pseudomonotone finite T dims 1-3 and pw1d", 1_000, zero_hull),
    fixed!("FIX-EJEM1", "(R_-×{-1}) ∪ (R_+×{1}) is pseudomonotone without zeros, T^rho = {xx* > 0 or x = 0}, Z_{T^rho} = {0}", fix_ejem1),
    check!("DOM-MIDPOINT", "co(dom T) ⊂ dom T^rho implies T pseudomonotone; the midpoint of a violating pair has an empty fiber",
        "random pw1d and 1-D finite T", 2_000, dom_midpoint),
    fixed!("FIX-TWO-POINT", "{(0,1),(1,0)} has T^rho = (]-∞,0]×R_-) ∪ ([1,∞[×R_++) and dom T ⊂ dom T^rho without being pseudomonotone", fix_two_point),
    check!("DOM-FULL", "dom T^rho = X implies T pseudomonotone", "random pw1d", 2_000, dom_full),
    check!("MONO-RESTATE", "segment transitivity and the midpoint domain criterion hold for the monotone relation",
        "random triples dims 1-3, random pw1d", 2_000, mono_restate),
    check!("GREEDY-EXT", "every pseudomonotone operator has a maximal pseudomonotone extension",
        "random pseudomonotone finite T in a finite universe", 300, greedy_ext, caveat = ZORN),
    check!("MAXPSEU", "for pseudomonotone T: T^rho is the union and T^rhorho the intersection of all maximal extensions; T maximal ⟺ T = T^rho",
        "random pseudomonotone finite T, exhaustive orders over |U \\ T| <= 5", 150, maxpseu, caveat = ZORN),
    check!("X0-RIGID", "a monotone operator is maximal pseudomonotone iff it is X×{0}",
        "random monotone pw1d, random monotone finite T dims 1-3", 1_000, x0_rigid,
        caveat = "separation in dimension 2 and up uses an explicit candidate, not the general separation theorem"),
    check!("PREMAX-INHERIT", "T ⊂ S pseudomonotone with T pre-maximal gives S pre-maximal and S^rho = T^rho",
        "random pseudomonotone pw1d", 1_000, premax_inherit),
    check!("PERTURB", "if every T + a* is pre-maximal pseudomonotone then T is monotone: a non-monotone T has a perturbation that is not even pseudomonotone",
        "random non-monotone finite T dims 1-3", 1_000, perturb,
        caveat = "the hypothesis quantifies over all of X*; only the falsification direction is tested"),
    // D-maximality
    check!("MAX-IS-DMAX", "a maximal pseudomonotone operator is D-maximal", "maximal polars of pre-maximal pw1d", 1_000, max_is_dmax),
    check!("HAT-PSEUDO", "T̂ is pseudomonotone", "random pseudomonotone pw1d and finite T dims 1-2", 1_000, hat_pseudo),
    check!("HAT-EQUIV", "T̂ is equivalent to T, contains every equivalent pseudomonotone operator, and depends only on the equivalence class",
        "random pseudomonotone pw1d and finite T dims 1-2", 1_000, hat_equiv),
    check!("CHAIN-EQ2", "T ⊂ T̂ ⊂ (T̂)^rho_D ⊂ T^rho_D", "random pseudomonotone pw1d and finite T dims 1-2", 1_000, chain_eq2),
    check!("DMAX-THM", "T is D-maximal iff T̂ = (T̂)^rho_D", "random pseudomonotone pw1d and 1-D finite T", 1_000, dmax_thm),
    check!("DOM-REMARK", "when dom T = X, T is D-maximal iff T̂ is maximal pseudomonotone",
        "random pseudomonotone pw1d with full domain", 1_000, dom_remark),
    fixed!("FIX-EJEM1-REMARK", "a D-maximal operator whose T̂ is not maximal", fix_ejem1_remark,
        caveat = "reproduced with open half-lines; with closed half-lines (0,0) extends T̂ and D-maximality fails"),
    check!("DMAX-COR", "T D-maximal gives T^rhorho_D ⊂ T̂ = (T̂)^rhorho_D", "random pseudomonotone pw1d", 1_000, dmax_cor),
    check!("DMAX-DOMEQ", "T D-maximal with dom T = dom T^rho gives T̂ maximal pseudomonotone", "random pseudomonotone pw1d", 10_000, dmax_domeq),
    check!("HAT-DOMCONV", "dom T convex gives (T̂)^rho_D = T^rho_D", "random pseudomonotone pw1d with interval domain", 1_000, hat_domconv),
    check!("HLEMMA", "T̂ = T^rho_D implies D-maximal, and conversely when dom T is convex", "random pseudomonotone pw1d", 1_000, hlemma),
    check!("DMAX-UNION", "T^rho_D is the union of the D-maximal operators containing T",
        "random pseudomonotone finite T with a universe over dom T", 150, dmax_union, caveat = ZORN),
    fixed!("FIX-DMAX-EXAMPLE", "{(0,-1),(1,0)} is D-maximal, T^rho_D is not pseudomonotone, and T^rho_D = T̂ ∪ S", fix_dmax_example),
    check!("HAT-REMARK", "T̂ = T^rho implies pre-maximal and D-maximal", "random pseudomonotone pw1d", 10_000, hat_remark),
    check!("PREMAX-DMAX", "for pre-maximal T, D-maximal iff T̂ = T^rho_D", "random pseudomonotone pw1d", 1_000, premax_dmax),
    check!("PREMAX-HAT", "for pre-maximal T, T̂ is pre-maximal and (T̂)^rho = T^rho", "random pseudomonotone pw1d", 1_000, premax_hat),
    // variational inequalities
    check!("VIP-FULL", "S(T,X) = Z_T and M(T,X) = Z_{T^rho}", "random pw1d", 1_000, vip_full),
    check!("MVIP-CONVEX", "M(T,K) is convex, and closed when K is closed", "random pw1d and intervals", 1_000, mvip_convex),
    skipped!("MVIP-WEAK-CLOSED", "M(T,K) is weakly closed when K is weakly closed and convex",
        "topological: weak-closedness is out of scope beyond convexity"),
    check!("VIP-LEMMA", "T1 ⊂ T2 gives S(T1,K) ⊂ S(T2,K) and M(T2,K) ⊂ M(T1,K)",
        "random finite T dims 1-3 and pw1d", 1_000, vip_lemma),
    check!("VIP-POLAR-CHAIN", "S(T^mu,K) ⊂ S(T^rho,K) ⊂ S(T^nu,K) = K and M(T^nu,K) ⊂ M(T^rho,K) ⊂ M(T^mu,K)",
        "random finite T dims 1-2", 500, vip_polar_chain, caveat = SAMPLED),
    check!("VIP-CROSS", "S(T^rho,K) ⊂ M(T,K) and S(T,K) ⊂ M(T^rho,K) for every T and K",
        "random finite T |dom| <= 4 dims 1-3, all K ⊂ dom", 500, vip_cross, caveat = SAMPLED),
    fixed!("FIX-VIP-STRICT", "the cross inclusions can be strict: S(T,R) = ∅ with M(T^rho,R) = {0}, and S(T^rho,{1,2}) = ∅ with M(T,{1,2}) = {1,2}", fix_vip_strict),
    check!("VIP-DIAGRAMS", "the inclusion diagrams for pseudomonotone and monotone T",
        "random pseudomonotone or monotone finite T |dom| <= 4 dims 1-3, all K ⊂ dom", 500, vip_diagrams, caveat = SAMPLED),
    check!("JOHN", "T pseudomonotone ⟺ S(T,K) ⊂ M(T,K) for all K ⊂ dom T",
        "random finite T |dom| <= 4 dims 1-3, all K ⊂ dom", 500, john),
    check!("PSEUDO-SVIP", "T pseudomonotone ⟺ S(T,K) ⊂ S(T^rho,K) for all K ⟺ M(T^rho,K) ⊂ M(T,K) for all K",
        "random finite T |dom| <= 4 dims 1-3, all K ⊂ dom plus one outside point", 300, pseudo_svip, caveat = SAMPLED),
    check!("PREMAX-VIP", "for everywhere defined pseudomonotone T: pre-maximal ⟺ S(T^rho,K) ⊂ M(T^rho,K) for all K ⊂ dom T^rho",
        "random pseudomonotone pw1d with full domain", 1_000, premax_vip),
    check!("PREMAX-SUFF", "S(T,K) = S(T^rho,K) or M(T,K) = M(T^rho,K) for all K implies pre-maximal",
        "random pw1d, random finite T dims 1-2, fixtures", 1_000, premax_suff,
        caveat = "the hypothesis ranges over every K ⊂ X; the contrapositive is checked with an explicit two-point K"),
    fixed!("PAPER-FIXTURES", "all worked examples reproduce exactly", worked_examples),
];

// ---------------------------------------------------------------- helpers

fn fail(v: serde_json::Value) -> Result<Trial> {
    Ok(Trial::Failed(v))
}

fn held(ok: bool, witness: impl FnOnce() -> serde_json::Value) -> Result<Trial> {
    Ok(Trial::check(ok, witness))
}

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

fn sv(x: &Rational) -> Vector {
    Vector::scalar(x.clone())
}

fn polar(t: &Pw) -> Result<Pw> {
    pw_polar(t, Pseudo)
}

fn polar_d(t: &Pw) -> Result<Pw> {
    Ok(polar(t)?.restrict(&t.domain()))
}

fn pseudo(t: &Pw) -> bool {
    pw_is_pseudomonotone(t).holds
}

fn same_set(a: &SolutionSet1D, b: &SolutionSet1D) -> bool {
    a.is_subset_of(b) && b.is_subset_of(a)
}

fn pw_any(g: &mut Gen) -> Pw {
    if g.chance(1, 3) {
        Pw::from_finite(&g.finite(1, 4)).expect("1-D")
    } else {
        g.pw1d(4)
    }
}

fn pw_pseudo(g: &mut Gen) -> Pw {
    if g.chance(1, 3) {
        Pw::from_finite(&g.finite_class(1, 4, Pseudo)).expect("1-D")
    } else {
        g.pw1d_pseudo(4)
    }
}

/// One sample from every cell cut out by the breakpoints of the operators.
fn probes(ops: &[&Pw]) -> Vec<Rational> {
    let mut breaks = BTreeSet::new();
    for op in ops {
        breaks.extend(op.breakpoints());
    }
    cells(&breaks).iter().map(Interval1D::sample).collect()
}

/// Sign representatives suffice for cone-valued fibers.
fn sign_covectors() -> [Rational; 3] {
    [r(-1), r(0), r(1)]
}

fn with_point(t: &Pw, x: &Rational, c: &Rational) -> Pw {
    let mut pieces = t.pieces().to_vec();
    pieces.push(Piece::new(Interval1D::point(x.clone()), ValueSet1D::point(c.clone())));
    Pw::new(pieces)
}

fn conic_hull(t: &Pw) -> Pw {
    Pw::new(t.pieces().iter().map(|p| Piece::new(p.interval.clone(), p.values.strict_conic_hull())).collect())
}

fn is_closed_set(s: &SolutionSet1D) -> bool {
    s.components().iter().all(|c| {
        (c.lo().value.finite().is_none() || c.lo().closed) && (c.hi().value.finite().is_none() || c.hi().closed)
    })
}

fn hull(s: &SolutionSet1D) -> Option<Interval1D> {
    let first = s.components().first()?;
    let last = s.components().last()?;
    Interval1D::new(first.lo().clone(), last.hi().clone()).ok()
}

/// Candidate points for dimension >= 2: the domain, midpoints and random points.
fn point_pool(g: &mut Gen, t: &FiniteOperator) -> Vec<Vector> {
    let dom = t.domain();
    let mut out: BTreeSet<Vector> = dom.iter().cloned().collect();
    for i in 0..dom.len() {
        for j in i + 1..dom.len() {
            out.insert(dom[i].lerp(&dom[j], &Rational::new(1, 2).unwrap()).unwrap());
        }
    }
    for _ in 0..4 {
        out.insert(g.vector(t.dim()));
    }
    out.into_iter().collect()
}

/// Candidate covectors at `x`: zero, the covectors of `T`, `±(y - x)` and two random ones.
fn covector_pool(g: &mut Gen, t: &FiniteOperator, x: &Vector) -> Vec<Vector> {
    let mut out = BTreeSet::new();
    out.insert(Vector::zero(t.dim()));
    for p in t.graph() {
        out.insert(p.covector.clone());
        let d = p.point.sub(x).unwrap();
        if !d.is_zero() {
            out.insert(d.neg());
            out.insert(d);
        }
    }
    out.insert(g.vector(t.dim()));
    out.insert(g.vector(t.dim()));
    out.into_iter().collect()
}

fn universe_pairs(g: &mut Gen, dim: usize, n: usize) -> Vec<Pair> {
    let mut out: Vec<Pair> = Vec::new();
    while out.len() < n {
        let p = if !out.is_empty() && g.chance(1, 3) {
            let x = out[g.index(out.len())].point.clone();
            Pair::new(x, g.covector(dim)).unwrap()
        } else {
            g.pair(dim)
        };
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn random_subset(g: &mut Gen, n: usize) -> BTreeSet<usize> {
    (0..n).filter(|_| g.chance(1, 2)).collect()
}

fn nonempty_subsets(points: &[Vector]) -> Vec<Vec<Vector>> {
    (1u32..(1 << points.len()))
        .map(|mask| (0..points.len()).filter(|i| mask >> i & 1 == 1).map(|i| points[i].clone()).collect())
        .collect()
}

fn included(a: &[Vector], b: &[Vector]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn pts(r: crate::vip::VipResult) -> PointSet {
    r.point_set().expect("finite K").clone()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

// ---------------------------------------------------------------- relations

fn rel_sym(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let p = g.pair(d);
    let q = if g.chance(1, 4) { Pair::new(p.point.clone(), g.covector(d))? } else { g.pair(d) };
    let pq = relate(&p, &q)?;
    let qp = relate(&q, &p)?;
    let pp = relate(&p, &p)?;
    let symmetric = PolarKind::ALL.iter().all(|&k| pq.holds(k) == qp.holds(k));
    let reflexive = PolarKind::ALL.iter().all(|&k| pp.holds(k));
    let ordered = (!pq.mono || pq.pseudo) && (!pq.pseudo || pq.quasi);
    held(symmetric && reflexive && ordered, || json!({ "p": p, "q": q }))
}

fn segment_triple(g: &mut Gen) -> Result<(Pair, Pair, Pair)> {
    let d = g.dim(1, 3);
    let x = g.vector(d);
    let y = g.vector(d);
    // at t = 0 or 1 the middle pair shares a point with an end pair and says nothing
    let z = x.lerp(&y, &g.unit_open())?;
    let p = Pair::new(x, g.covector(d))?;
    let q = Pair::new(y, g.covector(d))?;
    let m = Pair::new(z, g.covector(d))?;
    Ok((p, q, m))
}

fn rel_seg(g: &mut Gen) -> Result<Trial> {
    let (p, q, z) = segment_triple(g)?;
    if !(related(&p, &z, Pseudo) && related(&z, &q, Pseudo)) {
        return Ok(Trial::Vacuous);
    }
    held(related(&p, &q, Pseudo), || json!({ "x": p, "y": q, "z": z }))
}

fn rel_scale(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let t = g.finite(d, 4);
    if t.is_empty() {
        return Ok(Trial::Vacuous);
    }
    let u = g.pair_near(&t);
    if !polar_member(&t, &u, Pseudo)? {
        return Ok(Trial::Vacuous);
    }
    let y = t.graph()[g.index(t.len())].clone();
    let (ts, ss) = (g.positive(), g.positive());
    let a = Pair::new(u.point.clone(), u.covector.scale(&ts))?;
    let b = Pair::new(y.point.clone(), y.covector.scale(&ss))?;
    held(related(&a, &b, Pseudo), || json!({ "operator": t, "member": u, "y": y, "t": ts, "s": ss }))
}

// ---------------------------------------------------------------- polars

fn polar_sandwich(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let t = g.finite(d, 5);
    let u = g.pair_near(&t);
    let mu = polar_member(&t, &u, Mono)?;
    let rho = polar_member(&t, &u, Pseudo)?;
    let nu = polar_member(&t, &u, Quasi)?;
    held((!mu || rho) && (!rho || nu), || json!({ "operator": t, "candidate": u }))
}

fn polar_galois(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 2);
    let n = g.int(1, 10) as usize;
    let u = universe_pairs(g, d, n);
    let rho = |a: &BTreeSet<usize>| relative_polar(&u, a, Pseudo);
    let b = random_subset(g, n);
    let a: BTreeSet<usize> = b.iter().copied().filter(|_| g.chance(2, 3)).collect();
    let c = random_subset(g, n);
    let antitone = rho(&b).is_subset(&rho(&a));
    let extensive = a.is_subset(&rho(&rho(&a)));
    let triple = rho(&rho(&rho(&a))) == rho(&a);
    let ac: BTreeSet<usize> = a.union(&c).copied().collect();
    let unions = rho(&ac) == rho(&a).intersection(&rho(&c)).copied().collect();
    held(
        antitone && extensive && triple && unions,
        || json!({ "universe": u, "a": a, "b": b, "c": c, "laws": [antitone, extensive, triple, unions] }),
    )
}

fn polar_empty_full(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let u = g.pair(d);
    let empty = FiniteOperator::empty(d);
    let in_all = PolarKind::ALL.iter().map(|&k| polar_member(&empty, &u, k)).collect::<Result<Vec<_>>>()?;
    // an explicit unrelated partner shows u is outside (X×X*)^rho
    let partner = if u.covector.is_zero() {
        let mut e = vec![Rational::zero(); d];
        e[0] = r(1);
        let e = Vector::new(e)?;
        Pair::new(u.point.add(&e)?, e.neg())?
    } else {
        Pair::new(u.point.add(&u.covector)?, u.covector.neg())?
    };
    held(in_all.iter().all(|&b| b) && !related(&u, &partner, Pseudo), || json!({ "candidate": u, "partner": partner }))
}

fn polar_mixed(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 2);
    let n = g.int(1, 10) as usize;
    let u = universe_pairs(g, d, n);
    let p = |a: &BTreeSet<usize>, k| relative_polar(&u, a, k);
    let a = random_subset(g, n);
    let (rho, mu) = (p(&a, Pseudo), p(&a, Mono));
    let rho_mu = p(&rho, Mono);
    let mu_mu = p(&mu, Mono);
    let mu_rho = p(&mu, Pseudo);
    let rho_rho = p(&rho, Pseudo);
    let six = rho_mu.is_subset(&mu_mu) && mu_mu.is_subset(&mu_rho);
    let seven = rho_mu.is_subset(&rho_rho) && rho_rho.is_subset(&mu_rho);
    held(six && seven, || json!({ "universe": u, "a": a }))
}

fn zero_singleton(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let x = g.vector(d);
    let t = FiniteOperator::new(d, vec![Pair::new(x, Vector::zero(d))?])?;
    let u = g.pair_near(&t);
    let same = polar_member(&t, &u, Pseudo)? == polar_member(&t, &u, Mono)?;
    // (R×{0})^rho: on the line, membership iff the covector vanishes
    let c = g.rational();
    let line = fixtures::real_line_zero();
    let fixed_point = pw_polar_member(&line, &Pair::scalar(g.rational(), c.clone()), Pseudo)? == c.is_zero();
    held(same && fixed_point, || json!({ "operator": t, "candidate": u, "c": c }))
}

fn zero_convex(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 3) {
        let t = pw_any(g);
        let z = pw_zero_polar_set(&t);
        return held(z.is_convex() && is_closed_set(&z), || json!({ "operator": t, "zeros": z }));
    }
    let d = g.dim(1, 3);
    let t = g.finite(d, 5);
    let pool = point_pool(g, &t);
    let mut members = Vec::new();
    for x in pool {
        if zero_polar_member(&t, &x)? {
            members.push(x);
        }
    }
    if members.len() < 2 {
        return Ok(Trial::Vacuous);
    }
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let lam = g.unit_open();
            let m = members[i].lerp(&members[j], &lam)?;
            if !zero_polar_member(&t, &m)? {
                return fail(json!({ "operator": t, "x": members[i], "y": members[j], "t": lam }));
            }
        }
    }
    Ok(Trial::Held)
}

fn zero_mu_rho(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 3) {
        let t = pw_any(g);
        for x in probes(&[&t]) {
            let z = pw_zero_polar_member(&t, &x);
            let mu = mono_fiber_1d(&t, &x).is_some_and(|f| f.contains(&Rational::zero()));
            let rho = pw_polar_fiber(&t, &x, Pseudo)?.has_zero();
            if z != mu || z != rho {
                return fail(json!({ "operator": t, "x": x, "zero_set": z, "mu": mu, "rho": rho }));
            }
        }
        return Ok(Trial::Held);
    }
    let d = g.dim(1, 3);
    let t = g.finite(d, 5);
    let x = g.pair_near(&t).point;
    let z = zero_polar_member(&t, &x)?;
    let zero = Pair::new(x.clone(), Vector::zero(d))?;
    let mu = polar_member(&t, &zero, Mono)?;
    let rho = polar_member(&t, &zero, Pseudo)?;
    held(z == mu && z == rho, || json!({ "operator": t, "x": x }))
}

fn cone_inv(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 3) {
        let t = pw_any(g);
        let a = polar(&t)?;
        let b = polar(&conic_hull(&t))?;
        return held(pw_same_graph(&a, &b) && pw_same_graph(&a, &conic_hull(&a)), || json!({ "operator": t }));
    }
    let d = g.dim(1, 3);
    let t = g.finite(d, 5);
    let factors: Vec<Rational> = (0..t.len()).map(|_| g.positive()).collect();
    let scaled = scale_covectors(&t, &factors)?;
    let u = g.pair_near(&t);
    let s = g.positive();
    let us = Pair::new(u.point.clone(), u.covector.scale(&s))?;
    let base = polar_member(&t, &u, Pseudo)?;
    let ok = base == polar_member(&scaled, &u, Pseudo)? && base == polar_member(&t, &us, Pseudo)?;
    held(ok, || json!({ "operator": t, "factors": factors, "candidate": u, "t": s }))
}

fn fiber_convex(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(2, 3);
    let t = g.finite(d, 5);
    let x = g.pair_near(&t).point;
    let mut members = Vec::new();
    for c in covector_pool(g, &t, &x) {
        if polar_member(&t, &Pair::new(x.clone(), c.clone())?, Pseudo)? {
            members.push(c);
        }
    }
    if members.len() < 2 {
        return Ok(Trial::Vacuous);
    }
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let lam = g.unit_open();
            let c = members[i].lerp(&members[j], &lam)?;
            if !polar_member(&t, &Pair::new(x.clone(), c)?, Pseudo)? {
                return fail(json!({ "operator": t, "x": x, "u": members[i], "v": members[j], "t": lam }));
            }
        }
    }
    Ok(Trial::Held)
}

fn trhogen_oracle(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let t = g.finite(d, 6);
    let u = g.pair_near(&t);
    let direct = polar_member(&t, &u, Pseudo)?;
    let cones = polar_member_via_cones(&t, &u)?;
    let mut fibers_agree = true;
    if d == 1 {
        let x = u.point.as_scalar().unwrap();
        fibers_agree = polar_fiber_1d(&Operator::Finite(t.clone()), x, Pseudo)? == polar_fiber_via_cones_1d(&t, x)?;
    }
    held(direct == cones && fibers_agree, || json!({ "operator": t, "candidate": u, "direct": direct, "cones": cones }))
}

fn trhozero_equiv(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let t = g.finite(d, 5);
    let x = g.pair_near(&t).point;
    let v_empty = v_set(&t, &x)?.is_empty();
    let z = zero_polar_member(&t, &x)?;
    let w = w_set(&t, &x)?;
    let mut fiber_is_cone = true;
    if d == 1 {
        let ws: Vec<Rational> = w.iter().map(|p| p.as_scalar().unwrap().clone()).collect();
        let xs = x.as_scalar().unwrap();
        fiber_is_cone = polar_fiber_1d(&Operator::Finite(t.clone()), xs, Pseudo)? == normal_cone_1d(&ws, xs, false);
    } else {
        for c in covector_pool(g, &t, &x) {
            let p = Pair::new(x.clone(), c.clone())?;
            if polar_member(&t, &p, Pseudo)? != normal_cone_member(&w, &x, &c, false)? {
                fiber_is_cone = false;
                break;
            }
        }
        // the zero covector separates the two sides whenever V is nonempty
    }
    held(v_empty == z && v_empty == fiber_is_cone, || json!({ "operator": t, "x": x }))
}

fn fix_closure() -> Result<Trial> {
    let t = fixtures::real_line_zero();
    let rho = polar(&t)?;
    let nu = pw_polar(&t, Quasi)?;
    held(pw_same_graph(&rho, &t) && pw_same_graph(&nu, &fixtures::whole_plane()), || json!({ "rho": rho, "nu": nu }))
}

// ---------------------------------------------------------------- pseudomonotone operators

fn pseudo_equiv(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 2) {
        let t = pw_any(g);
        let p = polar(&t)?;
        let pp = polar(&p)?;
        let flags = [pseudo(&t), pw_is_subset(&t, &p), pw_is_subset(&pp, &p), pseudo(&pp), pseudo(&conic_hull(&t))];
        return held(flags.iter().all(|&f| f == flags[0]), || json!({ "operator": t, "flags": flags }));
    }
    let d = g.dim(1, 3);
    let t = g.finite_mixed(d, 4);
    let one = is_class(&t, Pseudo);
    let mut two = true;
    for p in t.graph() {
        two &= polar_member(&t, p, Pseudo)?;
    }
    let factors: Vec<Rational> = (0..t.len()).map(|_| g.positive()).collect();
    let scaled = scale_covectors(&t, &factors)?;
    let mut cone_graph = t.graph().to_vec();
    for p in scaled.graph() {
        if !cone_graph.contains(p) {
            cone_graph.push(p.clone());
        }
    }
    let five = is_class(&FiniteOperator::new(d, cone_graph.clone())?, Pseudo);
    // universe-relative double polar
    let mut u = cone_graph;
    for p in universe_pairs(g, d, 6) {
        if !u.contains(&p) {
            u.push(p);
        }
    }
    let a: BTreeSet<usize> = (0..t.len()).collect();
    let rho = relative_polar(&u, &a, Pseudo);
    let rr = relative_polar(&u, &rho, Pseudo);
    let three = rr.is_subset(&rho);
    let four = rr.iter().all(|&i| rr.iter().all(|&j| related(&u[i], &u[j], Pseudo)));
    let flags = [one, two, three, four, five];
    held(flags.iter().all(|&f| f == one), || json!({ "operator": t, "factors": factors, "flags": flags }))
}

fn ext_one(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let t = g.finite_class(d, 5, Pseudo);
    let u = g.pair_near(&t);
    let member = polar_member(&t, &u, Pseudo)?;
    let extended = if t.contains(&u) { true } else { is_class(&t.with_pair(u.clone())?, Pseudo) };
    held(member == extended, || json!({ "operator": t, "candidate": u }))
}

fn fix_variational() -> Result<Trial> {
    let t = fixtures::ejem_variational();
    let rho = polar(&t)?;
    let nu = pw_polar(&t, Quasi)?;
    let mut nu_ok = true;
    for x in [-2, -1, 0, 1, 2].map(r).into_iter().chain([Rational::new(1, 2)?]) {
        for c in [-1, 0, 1].map(r).into_iter().chain([Rational::new(1, 2)?]) {
            let expected = !x.is_positive() || !c.is_negative();
            nu_ok &= pw_polar_member(&t, &Pair::scalar(x.clone(), c.clone()), Quasi)? == expected;
        }
    }
    let c = pw_classify(&t);
    let ok = pw_same_graph(&rho, &fixtures::ejem_variational_polar())
        && nu_ok
        && c.quasimonotone.holds
        && !c.pseudomonotone.holds
        && pw_is_class(&rho, Mono).holds;
    held(ok, || json!({ "rho": rho, "nu": nu }))
}

fn zero_hull(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 3) {
        let t = pw_pseudo(g);
        let z = t.zeros();
        let Some(h) = hull(&z) else { return Ok(Trial::Vacuous) };
        let zr = pw_zero_polar_set(&t);
        return held(SolutionSet1D::from_interval(h).is_subset_of(&zr), || json!({ "operator": t }));
    }
    let d = g.dim(1, 3);
    let t = g.finite_class(d, 5, Pseudo);
    let zeros = t.zeros();
    if zeros.is_empty() {
        return Ok(Trial::Vacuous);
    }
    // random convex combination of all zeros
    let weights: Vec<Rational> = zeros.iter().map(|_| g.unit_closed()).collect();
    let total = weights.iter().fold(Rational::zero(), |a, w| &a + w);
    let x = if total.is_zero() {
        zeros[0].clone()
    } else {
        let mut acc = Vector::zero(d);
        for (z, w) in zeros.iter().zip(&weights) {
            acc = acc.add(&z.scale(&(w / &total)))?;
        }
        acc
    };
    held(zero_polar_member(&t, &x)?, || json!({ "operator": t, "combination": x }))
}

fn fix_ejem1() -> Result<Trial> {
    let t = fixtures::ejem1();
    let rho = polar(&t)?;
    let zr = pw_zero_polar_set(&t);
    let ok = pseudo(&t)
        && t.zeros().is_empty()
        && pw_same_graph(&rho, &fixtures::ejem1_polar())
        && same_set(&zr, &SolutionSet1D::from_points([&r(0)]));
    held(ok, || json!({ "rho": rho, "zeros_of_polar": zr }))
}

fn dom_midpoint(g: &mut Gen) -> Result<Trial> {
    let t = pw_any(g);
    let v = pw_is_pseudomonotone(&t);
    if let Some((p, q)) = &v.witness {
        let z = p.point.as_scalar().unwrap().midpoint(q.point.as_scalar().unwrap());
        if !pw_polar_fiber(&t, &z, Pseudo)?.is_empty() {
            return fail(json!({ "operator": t, "violation": [p, q], "midpoint": z }));
        }
    }
    let dom_polar = polar(&t)?.domain();
    let covered = hull(&t.domain()).is_none_or(|h| SolutionSet1D::from_interval(h).is_subset_of(&dom_polar));
    held(!covered || v.holds, || json!({ "operator": t }))
}

fn fix_two_point() -> Result<Trial> {
    let t = fixtures::two_point();
    let pw = Pw::from_finite(&t)?;
    let rho = polar(&pw)?;
    let ok = pw_same_graph(&rho, &fixtures::two_point_polar())
        && pw.domain().is_subset_of(&rho.domain())
        && !classify(&t).pseudomonotone
        && classify(&t).quasimonotone;
    held(ok, || json!({ "rho": rho }))
}

fn dom_full(g: &mut Gen) -> Result<Trial> {
    let t = pw_any(g);
    if !same_set(&polar(&t)?.domain(), &SolutionSet1D::real_line()) {
        return Ok(Trial::Vacuous);
    }
    held(pseudo(&t), || json!({ "operator": t }))
}

fn mono_restate(g: &mut Gen) -> Result<Trial> {
    let (p, q, z) = segment_triple(g)?;
    if related(&p, &z, Mono) && related(&z, &q, Mono) && !related(&p, &q, Mono) {
        return fail(json!({ "x": p, "y": q, "z": z }));
    }
    let t = pw_any(g);
    for x in probes(&[&t]) {
        let fiber = mono_fiber_1d(&t, &x);
        for c in [-3, -1, 0, 1, 3].map(r).into_iter().chain(t.elements().into_iter().map(|(_, a)| a.representative())) {
            let direct = pw_polar_member(&t, &Pair::scalar(x.clone(), c.clone()), Mono)?;
            if direct != fiber.as_ref().is_some_and(|f| f.contains(&c)) {
                return fail(json!({ "operator": t, "x": x, "c": c, "fiber": fiber }));
            }
        }
    }
    let v = pw_is_class(&t, Mono);
    if let Some((a, b)) = &v.witness {
        let m = a.point.as_scalar().unwrap().midpoint(b.point.as_scalar().unwrap());
        if mono_fiber_1d(&t, &m).is_some() {
            return fail(json!({ "operator": t, "violation": [a, b], "midpoint": m }));
        }
    }
    // every cell of the hull of dom T with a nonempty monotone fiber forces monotonicity
    if let Some(h) = hull(&t.domain()) {
        let covered = probes(&[&t]).iter().filter(|x| h.contains(x)).all(|x| mono_fiber_1d(&t, x).is_some());
        if covered && !v.holds {
            return fail(json!({ "operator": t, "reason": "monotone polar defined on the hull of the domain" }));
        }
    }
    Ok(Trial::Held)
}

fn greedy_ext(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 2);
    let t = g.finite_class(d, 3, Pseudo);
    let u = Universe::new(d, universe_pairs(g, d, 8))?;
    let mut order: Vec<usize> = (0..u.len()).collect();
    for i in (1..order.len()).rev() {
        let j = g.index(i + 1);
        order.swap(i, j);
    }
    let rep = greedy_maximal_extension(&t, &u, &order)?;
    let ok = t.is_subset_of(&rep.extension) && is_class(&rep.extension, Pseudo) && rep.maximal_in_universe;
    held(ok, || json!({ "operator": t, "universe": u, "order": order }))
}

/// Distinct maximal extensions of `t` inside `t ∪ extras`, over every scan order.
fn all_maximal_extensions(t: &FiniteOperator, extras: &Universe) -> Result<BTreeSet<BTreeSet<Pair>>> {
    let mut out = BTreeSet::new();
    for order in permutations(extras.len()) {
        let rep = greedy_maximal_extension(t, extras, &order)?;
        out.insert(rep.extension.graph().iter().cloned().collect());
    }
    Ok(out)
}

fn maxpseu(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 2);
    let t = g.finite_class(d, 3, Pseudo);
    let extras: Vec<Pair> = universe_pairs(g, d, 5).into_iter().filter(|p| !t.contains(p)).collect();
    let ext_u = Universe::new(d, extras.clone())?;
    let exts = all_maximal_extensions(&t, &ext_u)?;
    let mut w: Vec<Pair> = t.graph().to_vec();
    w.extend(extras);
    let a: BTreeSet<usize> = (0..t.len()).collect();
    let rho = relative_polar(&w, &a, Pseudo);
    let rr = relative_polar(&w, &rho, Pseudo);
    let as_pairs = |s: &BTreeSet<usize>| s.iter().map(|&i| w[i].clone()).collect::<BTreeSet<Pair>>();
    let union: BTreeSet<Pair> = exts.iter().flatten().cloned().collect();
    let mut inter: Option<BTreeSet<Pair>> = None;
    for e in &exts {
        inter = Some(match inter {
            None => e.clone(),
            Some(i) => i.intersection(e).cloned().collect(),
        });
    }
    let one = union == as_pairs(&rho);
    let two = inter.unwrap_or_default() == as_pairs(&rr);
    let maximal = exts.len() == 1 && exts.iter().next().unwrap().len() == t.len();
    let three = maximal == (rho == a);
    held(one && two && three, || json!({ "operator": t, "universe": w, "laws": [one, two, three] }))
}

fn x0_rigid(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 2) {
        let t = if g.chance(1, 3) {
            // R×{0} plus redundant zero pieces
            let mut pieces = vec![Piece::new(Interval1D::real_line(), ValueSet1D::point(r(0)))];
            for _ in 0..g.int(0, 2) {
                pieces.push(Piece::new(g.interval(), ValueSet1D::point(r(0))));
            }
            Pw::new(pieces)
        } else {
            g.pw1d(3)
        };
        if !pw_is_class(&t, Mono).holds {
            return Ok(Trial::Vacuous);
        }
        let maximal = pw_same_graph(&t, &polar(&t)?);
        let is_x0 = pw_same_graph(&t, &fixtures::real_line_zero());
        return held(maximal == is_x0, || json!({ "operator": t }));
    }
    // a finite monotone operator is never X×{0}; exhibit a polar member outside it
    let d = g.dim(1, 3);
    let t = g.finite_class(d, 4, Mono);
    let top = t.domain().iter().map(|p| p.coords()[0].clone()).max().unwrap_or_else(Rational::zero);
    let mut x = vec![Rational::zero(); d];
    x[0] = &top + &r(1);
    let mut e = vec![Rational::zero(); d];
    e[0] = r(1);
    let u = Pair::new(Vector::new(x)?, Vector::new(e)?)?;
    held(polar_member(&t, &u, Pseudo)? && !t.contains(&u), || json!({ "operator": t, "candidate": u }))
}

fn premax_inherit(g: &mut Gen) -> Result<Trial> {
    let t = pw_pseudo(g);
    let p = polar(&t)?;
    if !pseudo(&p) || p.pieces().is_empty() {
        return Ok(Trial::Vacuous);
    }
    // S adds a few elements of T^rho to T
    let mut pieces = t.pieces().to_vec();
    for _ in 0..g.int(1, 3) {
        let piece = &p.pieces()[g.index(p.pieces().len())];
        if g.chance(1, 2) {
            pieces.push(piece.clone());
        } else {
            let atoms = piece.values.atoms();
            let a = &atoms[g.index(atoms.len())];
            pieces.push(Piece::new(Interval1D::point(piece.interval.sample()), ValueSet1D::point(a.representative())));
        }
    }
    let s = Pw::new(pieces);
    let sp = polar(&s)?;
    held(pseudo(&s) && pseudo(&sp) && pw_same_graph(&sp, &p), || json!({ "operator": t, "extension": s }))
}

fn perturb(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let t = g.finite(d, 5);
    let Some((p, q)) = classify(&t).witness.monotone else { return Ok(Trial::Vacuous) };
    // grid search first, then the midpoint shift that always works
    let mut candidates: Vec<Vector> = (0..20).map(|_| g.vector(d)).collect();
    candidates.push(p.covector.add(&q.covector)?.scale(&Rational::new(-1, 2)?));
    for alpha in &candidates {
        if !is_class(&translate(&t, alpha)?, Pseudo) {
            return Ok(Trial::Held);
        }
    }
    fail(json!({ "operator": t, "violation": [p, q] }))
}

// ---------------------------------------------------------------- D-maximality

fn max_is_dmax(g: &mut Gen) -> Result<Trial> {
    let t = pw_pseudo(g);
    let m = polar(&t)?;
    if !pseudo(&m) {
        return Ok(Trial::Vacuous);
    }
    // T pre-maximal makes T^rho maximal
    let maximal = pw_same_graph(&polar(&m)?, &m);
    held(maximal && pw_is_d_maximal(&m)?.d_maximal, || json!({ "operator": t, "maximal": m }))
}

fn finite_hat_sample(g: &mut Gen, t: &FiniteOperator) -> Result<Vec<Pair>> {
    let h = HatModel::unchecked(t.clone());
    let mut out = Vec::new();
    for x in t.domain() {
        for c in covector_pool(g, t, &x) {
            if hat_member(&h, &x, &c)? {
                out.push(Pair::new(x.clone(), c)?);
            }
        }
    }
    Ok(out)
}

fn hat_pseudo(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 2) {
        let t = pw_pseudo(g);
        return held(pseudo(&pw_hat(&t)), || json!({ "operator": t }));
    }
    let d = g.dim(1, 2);
    let t = g.finite_class(d, 4, Pseudo);
    let sample = finite_hat_sample(g, &t)?;
    match crate::polar::mutual_violation(&sample, Pseudo) {
        None => Ok(Trial::Held),
        Some(w) => fail(json!({ "operator": t, "violation": w })),
    }
}

fn rescale_points(g: &mut Gen, t: &Pw) -> Pw {
    let pieces = t
        .pieces()
        .iter()
        .map(|p| {
            let f = g.positive();
            let points: Vec<Rational> = p.values.points().map(|v| v * &f).collect();
            Piece::new(p.interval.clone(), ValueSet1D::new(points, p.values.rays()))
        })
        .collect();
    Pw::new(pieces)
}

fn hat_equiv(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 2) {
        let t = pw_pseudo(g);
        let h = pw_hat(&t);
        let mut ok = same_set(&h.domain(), &t.domain()) && same_set(&h.zeros(), &t.zeros());
        for x in probes(&[&t]) {
            if t.domain().contains(&x) && !t.zeros().contains(&x) {
                let (tf, hf) = (t.fiber(&x), h.fiber(&x));
                let signs = |v: &ValueSet1D| {
                    (v.atoms().iter().any(|a| a.sign().is_lt()), v.atoms().iter().any(|a| a.sign().is_gt()))
                };
                ok &= signs(&tf) == signs(&hf);
            }
        }
        let s = rescale_points(g, &t);
        ok &= pw_is_subset(&s, &h) && pw_same_graph(&pw_hat(&s), &h);
        return held(ok, || json!({ "operator": t, "rescaled": s }));
    }
    let d = g.dim(1, 2);
    let t = g.finite_class(d, 4, Pseudo);
    let factors: Vec<Rational> = (0..t.len()).map(|_| g.positive()).collect();
    let s = scale_covectors(&t, &factors)?;
    let (ht, hs) = (HatModel::unchecked(t.clone()), HatModel::unchecked(s.clone()));
    for p in s.graph() {
        if !hat_member(&ht, &p.point, &p.covector)? {
            return fail(json!({ "operator": t, "factors": factors, "outside_hat": p }));
        }
    }
    for x in point_pool(g, &t) {
        for c in covector_pool(g, &t, &x) {
            if hat_member(&ht, &x, &c)? != hat_member(&hs, &x, &c)? {
                return fail(json!({ "operator": t, "factors": factors, "x": x, "c": c }));
            }
        }
    }
    Ok(Trial::Held)
}

fn chain_eq2(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 2) {
        let t = pw_pseudo(g);
        let h = pw_hat(&t);
        let hp = polar_d(&h)?;
        let tp = polar_d(&t)?;
        let ok = pw_is_subset(&t, &h) && pw_is_subset(&h, &hp) && pw_is_subset(&hp, &tp);
        return held(ok, || json!({ "operator": t }));
    }
    let d = g.dim(1, 2);
    let t = g.finite_class(d, 4, Pseudo);
    let h = HatModel::unchecked(t.clone());
    for x in t.domain() {
        for c in covector_pool(g, &t, &x) {
            let u = Pair::new(x.clone(), c.clone())?;
            let steps = [t.contains(&u), hat_member(&h, &x, &c)?, h.related_to_all(&u)?, polar_member(&t, &u, Pseudo)?];
            if steps.windows(2).any(|w| w[0] && !w[1]) {
                return fail(json!({ "operator": t, "candidate": u, "steps": steps }));
            }
        }
    }
    Ok(Trial::Held)
}

fn dmax_thm(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 3) {
        // the finite-universe decision agrees with the exact one on the line
        let t = g.finite_class(1, 4, Pseudo);
        let pw = Pw::from_finite(&t)?;
        let exact = pw_is_d_maximal(&pw)?;
        let covs: Vec<Vector> = [-2, -1, 0, 1, 2].map(|c| Vector::from_ints(&[c])).to_vec();
        let u = Universe::grid(&t.domain(), &covs)?;
        let sampled = is_d_maximal(&t, &u)?;
        // the grid can miss witnesses, so only exact D-maximality transfers
        let ok = !exact.d_maximal || sampled.d_maximal;
        let agree_on_witness = match &exact.witness {
            Some(w) if u.candidates().contains(w) => !sampled.d_maximal,
            _ => true,
        };
        return held(ok && agree_on_witness, || json!({ "operator": t, "exact": exact, "sampled": sampled }));
    }
    let t = pw_pseudo(g);
    let h = pw_hat(&t);
    let v = pw_is_d_maximal(&t)?;
    match &v.witness {
        Some(w) => {
            // a proper pseudomonotone extension of T̂ over dom T
            let (x, c) = (w.point.as_scalar().unwrap(), w.covector.as_scalar().unwrap());
            let ext = with_point(&h, x, c);
            held(
                t.domain().contains(x) && !h.fiber(x).contains(c) && pseudo(&ext),
                || json!({ "operator": t, "witness": w }),
            )
        }
        None => {
            for x in probes(&[&t, &h]).iter().filter(|x| t.domain().contains(x)) {
                for c in sign_covectors() {
                    if !h.fiber(x).contains(&c) && pseudo(&with_point(&h, x, &c)) {
                        return fail(json!({ "operator": t, "extension": [x, c] }));
                    }
                }
            }
            Ok(Trial::Held)
        }
    }
}

fn full_domain_pw(g: &mut Gen) -> Pw {
    g.pw1d_full_domain(3)
}

fn convex_domain_pw(g: &mut Gen) -> Pw {
    g.pw1d_convex_domain(3)
}

fn dom_remark(g: &mut Gen) -> Result<Trial> {
    let Some(t) = draw_until(g, 40, full_domain_pw, pseudo) else { return Ok(Trial::Vacuous) };
    let h = pw_hat(&t);
    let dmax = pw_is_d_maximal(&t)?.d_maximal;
    held(dmax == pw_same_graph(&polar(&h)?, &h), || json!({ "operator": t }))
}

fn fix_ejem1_remark() -> Result<Trial> {
    let open = fixtures::ejem1_open();
    let h = pw_hat(&open);
    let open_ok = pw_is_d_maximal(&open)?.d_maximal && !pw_same_graph(&polar(&h)?, &h);
    let closed = pw_is_d_maximal(&fixtures::ejem1())?;
    let closed_ok = !closed.d_maximal && closed.witness == Some(Pair::scalar(r(0), r(0)));
    held(open_ok && closed_ok, || json!({ "open_hat": h, "closed": closed }))
}

/// Runs `f` on a random pseudomonotone piecewise operator; `None` means the hypothesis failed.
fn on_pseudo_pw(g: &mut Gen, f: impl FnOnce(&Pw) -> Result<Option<bool>>) -> Result<Trial> {
    let t = pw_pseudo(g);
    match f(&t)? {
        None => Ok(Trial::Vacuous),
        Some(ok) => held(ok, || json!({ "operator": t })),
    }
}

/// Redraws up to `tries` times until `keep` accepts.
fn draw_until(g: &mut Gen, tries: usize, draw: fn(&mut Gen) -> Pw, keep: fn(&Pw) -> bool) -> Option<Pw> {
    (0..tries).map(|_| draw(g)).find(keep)
}

fn dmax_cor(g: &mut Gen) -> Result<Trial> {
    on_pseudo_pw(g, |t| {
        if !pw_is_d_maximal(t)?.d_maximal {
            return Ok(None);
        }
        let h = pw_hat(t);
        let dom = t.domain();
        let tpp = polar(&polar(t)?)?.restrict(&dom);
        let hpp = polar(&polar(&h)?)?.restrict(&dom);
        Ok(Some(pw_is_subset(&tpp, &h) && pw_same_graph(&hpp, &h)))
    })
}

fn dmax_domeq(g: &mut Gen) -> Result<Trial> {
    on_pseudo_pw(g, |t| {
        if !pw_is_d_maximal(t)?.d_maximal || !same_set(&t.domain(), &polar(t)?.domain()) {
            return Ok(None);
        }
        let h = pw_hat(t);
        Ok(Some(pw_same_graph(&polar(&h)?, &h)))
    })
}

fn hat_domconv(g: &mut Gen) -> Result<Trial> {
    let Some(t) = draw_until(g, 20, convex_domain_pw, pseudo) else { return Ok(Trial::Vacuous) };
    let hp = polar_d(&pw_hat(&t))?;
    let tp = polar_d(&t)?;
    held(pw_same_graph(&hp, &tp), || json!({ "operator": t }))
}

fn hlemma(g: &mut Gen) -> Result<Trial> {
    let t = if g.chance(1, 2) { g.pw1d_convex_domain(3) } else { pw_pseudo(g) };
    if !pseudo(&t) {
        return Ok(Trial::Vacuous);
    }
    let eq = pw_same_graph(&pw_hat(&t), &polar_d(&t)?);
    let dmax = pw_is_d_maximal(&t)?.d_maximal;
    let convex = t.domain().is_convex();
    held((!eq || dmax) && (!convex || !dmax || eq), || json!({ "operator": t, "equal": eq, "d_maximal": dmax }))
}

fn dmax_union(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 2);
    let t = g.finite_class(d, 3, Pseudo);
    let dom = t.domain();
    if dom.is_empty() {
        return Ok(Trial::Vacuous);
    }
    let mut extras = Vec::new();
    while extras.len() < 5 {
        let p = Pair::new(dom[g.index(dom.len())].clone(), g.covector(d))?;
        if !t.contains(&p) && !extras.contains(&p) {
            extras.push(p);
        }
    }
    let exts = all_maximal_extensions(&t, &Universe::new(d, extras.clone())?)?;
    let union: BTreeSet<Pair> = exts.into_iter().flatten().collect();
    let mut polar_d_members: BTreeSet<Pair> = t.graph().iter().cloned().collect();
    for p in &extras {
        if polar_member(&t, p, Pseudo)? {
            polar_d_members.insert(p.clone());
        }
    }
    held(union == polar_d_members, || json!({ "operator": t, "extras": extras }))
}

fn fix_dmax_example() -> Result<Trial> {
    let t = fixtures::dmax_example();
    let pw = Pw::from_finite(&t)?;
    let h = pw_hat(&pw);
    let rho_d = polar_d(&pw)?;
    let fib = |op: &Pw, x: i64| op.fiber(&r(x)).to_cone();
    let s = Pw::new(vec![
        Piece::new(Interval1D::point(r(0)), ValueSet1D::from_cone(&Cone1D::NEG_CLOSED)),
        Piece::new(Interval1D::point(r(1)), ValueSet1D::from_cone(&Cone1D::POS_CLOSED)),
    ]);
    let union = Pw::new(h.pieces().iter().chain(s.pieces()).cloned().collect());
    let mut grid_covs = Vec::new();
    for num in -6..=6 {
        grid_covs.push(Vector::scalar(Rational::new(num, 2)?));
    }
    let u = Universe::grid(&[Vector::from_ints(&[0]), Vector::from_ints(&[1])], &grid_covs)?;
    let ok = fib(&h, 0) == Some(Cone1D::NEG_OPEN)
        && fib(&h, 1) == Some(Cone1D::ALL)
        && fib(&rho_d, 0) == Some(Cone1D::NEG_CLOSED)
        && fib(&rho_d, 1) == Some(Cone1D::ALL)
        && pw_is_d_maximal(&pw)?.d_maximal
        && is_d_maximal(&t, &u)?.d_maximal
        && !pseudo(&rho_d)
        && pw_is_subset(&Pw::from_finite(&t)?, &s)
        && pseudo(&s)
        && pw_is_d_maximal(&s)?.d_maximal
        && pw_same_graph(&rho_d, &union);
    held(ok, || json!({ "hat": h, "polar_on_domain": rho_d }))
}

fn hat_remark(g: &mut Gen) -> Result<Trial> {
    on_pseudo_pw(g, |t| {
        let p = polar(t)?;
        if !pw_same_graph(&pw_hat(t), &p) {
            return Ok(None);
        }
        Ok(Some(pseudo(&p) && pw_is_d_maximal(t)?.d_maximal))
    })
}

fn premax_dmax(g: &mut Gen) -> Result<Trial> {
    on_pseudo_pw(g, |t| {
        if !pseudo(&polar(t)?) {
            return Ok(None);
        }
        Ok(Some(pw_is_d_maximal(t)?.d_maximal == pw_same_graph(&pw_hat(t), &polar_d(t)?)))
    })
}

fn premax_hat(g: &mut Gen) -> Result<Trial> {
    on_pseudo_pw(g, |t| {
        let p = polar(t)?;
        if !pseudo(&p) {
            return Ok(None);
        }
        let hp = polar(&pw_hat(t))?;
        Ok(Some(pseudo(&hp) && pw_same_graph(&hp, &p)))
    })
}

// ---------------------------------------------------------------- variational inequalities

fn vip_full(g: &mut Gen) -> Result<Trial> {
    let t = pw_any(g);
    let all = Interval1D::real_line();
    let s = svip_pw_interval(&t, &all);
    let m = mvip_pw_interval(&t, &all);
    held(same_set(&s, &t.zeros()) && same_set(&m, &pw_zero_polar_set(&t)), || json!({ "operator": t }))
}

fn mvip_convex(g: &mut Gen) -> Result<Trial> {
    let t = pw_any(g);
    let k = g.interval();
    let m = mvip_pw_interval(&t, &k);
    let k_closed =
        (k.lo().value.finite().is_none() || k.lo().closed) && (k.hi().value.finite().is_none() || k.hi().closed);
    held(m.is_convex() && (!k_closed || is_closed_set(&m)), || json!({ "operator": t, "k": k, "m": m }))
}

fn vip_lemma(g: &mut Gen) -> Result<Trial> {
    if g.chance(1, 3) {
        let t1 = pw_any(g);
        let mut pieces = t1.pieces().to_vec();
        pieces.extend(g.pw1d(2).pieces().iter().cloned());
        let t2 = Pw::new(pieces);
        let k = g.interval();
        let ok = svip_pw_interval(&t1, &k).is_subset_of(&svip_pw_interval(&t2, &k))
            && mvip_pw_interval(&t2, &k).is_subset_of(&mvip_pw_interval(&t1, &k));
        return held(ok, || json!({ "t1": t1, "t2": t2, "k": k }));
    }
    let d = g.dim(1, 3);
    let t1 = g.finite(d, 4);
    let mut graph = t1.graph().to_vec();
    for p in universe_pairs(g, d, 3) {
        if !graph.contains(&p) {
            graph.push(p);
        }
    }
    let t2 = FiniteOperator::new(d, graph)?;
    let mut k: Vec<Vector> = t2.domain().into_iter().filter(|_| g.chance(2, 3)).collect();
    k.push(g.vector(d));
    k.sort();
    k.dedup();
    let ok = included(&pts(svip_finite(&t1, &k)), &pts(svip_finite(&t2, &k)))
        && included(&pts(mvip_finite(&t2, &k)), &pts(mvip_finite(&t1, &k)));
    held(ok, || json!({ "t1": t1, "t2": t2, "k": k }))
}

fn vip_polar_chain(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 2);
    let t = g.finite(d, 4);
    let op = Operator::Finite(t.clone());
    let mut k: Vec<Vector> = t.domain().into_iter().filter(|_| g.chance(2, 3)).collect();
    k.push(g.vector(d));
    k.sort();
    k.dedup();
    let s = |kind| polar_vip(&op, &k, kind, Which::S).map(pts);
    let m = |kind| polar_vip(&op, &k, kind, Which::M).map(pts);
    let (s_mu, s_rho, s_nu) = (s(Mono)?, s(Pseudo)?, s(Quasi)?);
    let (m_mu, m_rho, m_nu) = (m(Mono)?, m(Pseudo)?, m(Quasi)?);
    let ok = included(&s_mu, &s_rho)
        && included(&s_rho, &s_nu)
        && s_nu == k
        && included(&m_nu, &m_rho)
        && included(&m_rho, &m_mu);
    held(ok, || json!({ "operator": t, "k": k }))
}

fn small_domain_operator(g: &mut Gen, kind: Option<PolarKind>) -> FiniteOperator {
    let d = g.dim(1, 3);
    match kind {
        Some(k) => g.finite_class(d, 4, k),
        None => g.finite(d, 4),
    }
}

fn all_k_reports(t: &FiniteOperator) -> Result<Option<serde_json::Value>> {
    let op = Operator::Finite(t.clone());
    for k in nonempty_subsets(&t.domain()) {
        let rep = cross_inclusions(&op, &ConstraintSet::finite(k.clone())?)?;
        if !rep.pass {
            return Ok(Some(json!({ "operator": t, "k": k, "report": rep })));
        }
    }
    Ok(None)
}

fn vip_cross(g: &mut Gen) -> Result<Trial> {
    let t = small_domain_operator(g, None);
    Ok(match all_k_reports(&t)? {
        None => Trial::Held,
        Some(w) => Trial::Failed(w),
    })
}

fn vip_diagrams(g: &mut Gen) -> Result<Trial> {
    let kind = if g.chance(1, 2) { Pseudo } else { Mono };
    let t = small_domain_operator(g, Some(kind));
    Ok(match all_k_reports(&t)? {
        None => Trial::Held,
        Some(w) => Trial::Failed(w),
    })
}

fn fix_vip_strict() -> Result<Trial> {
    let ejem1: Operator = fixtures::ejem1().into();
    let ejem1_polar: Operator = polar(&fixtures::ejem1())?.into();
    let line = ConstraintSet::Interval(Interval1D::real_line());
    let s1 = svip(&ejem1, &line)?;
    let m1 = mvip(&ejem1_polar, &line)?;
    let var: Operator = fixtures::ejem_variational().into();
    let var_polar: Operator = polar(&fixtures::ejem_variational())?.into();
    let k12 = vec![Vector::from_ints(&[1]), Vector::from_ints(&[2])];
    let kset = ConstraintSet::finite(k12.clone())?;
    let s2 = svip(&var_polar, &kset)?;
    let m2 = mvip(&var, &kset)?;
    let ok = s1.solutions.is_empty()
        && matches!(&m1.solutions, crate::vip::Solutions::Set(z) if same_set(z, &SolutionSet1D::from_points([&r(0)])))
        && s2.solutions.is_empty()
        && m2.point_set() == Some(&k12);
    held(ok, || json!({ "s_t_r": s1, "m_rho_r": m1, "s_rho_k": s2, "m_t_k": m2 }))
}

fn john(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let t = g.finite_mixed(d, 4);
    let rep = john_equivalence(&t, 4)?;
    held(rep.holds, || json!({ "operator": t, "report": rep }))
}

fn pseudo_svip(g: &mut Gen) -> Result<Trial> {
    let d = g.dim(1, 3);
    let t = g.finite_mixed(d, 4);
    let op = Operator::Finite(t.clone());
    let mut ground = t.domain();
    let extra = g.vector(d);
    if !ground.contains(&extra) {
        ground.push(extra);
    }
    let (mut two, mut three) = (true, true);
    for k in nonempty_subsets(&ground) {
        let s_t = pts(svip_finite(&t, &k));
        let m_t = pts(mvip_finite(&t, &k));
        two &= included(&s_t, &pts(polar_vip(&op, &k, Pseudo, Which::S)?));
        three &= included(&pts(polar_vip(&op, &k, Pseudo, Which::M)?), &m_t);
    }
    let one = is_class(&t, Pseudo);
    held(one == two && one == three, || json!({ "operator": t, "ground": ground, "flags": [one, two, three] }))
}

fn premax_vip(g: &mut Gen) -> Result<Trial> {
    let Some(t) = draw_until(g, 40, full_domain_pw, pseudo) else { return Ok(Trial::Vacuous) };
    let p = polar(&t)?;
    let pop: Operator = p.clone().into();
    let v = pw_is_pseudomonotone(&p);
    let inclusion_on = |k: Vec<Vector>| -> Result<bool> {
        let kset = ConstraintSet::finite(k)?;
        Ok(svip(&pop, &kset)?.solutions.is_subset_of(&mvip(&pop, &kset)?.solutions))
    };
    match &v.witness {
        Some((a, b)) => {
            let k = vec![a.point.clone(), b.point.clone()];
            held(!inclusion_on(k.clone())?, || json!({ "operator": t, "k": k }))
        }
        None => {
            let dom: Vec<Rational> = probes(&[&p]).into_iter().filter(|x| p.domain().contains(x)).collect();
            for _ in 0..4 {
                let k: Vec<Vector> = (0..g.int(1, 3)).map(|_| sv(&dom[g.index(dom.len())])).collect();
                if !inclusion_on(k.clone())? {
                    return fail(json!({ "operator": t, "k": k }));
                }
            }
            Ok(Trial::Held)
        }
    }
}

/// `S(T,K) ≠ S(T^rho,K)` and `M(T,K) ≠ M(T^rho,K)` on the same `K`.
fn both_differ(op: &Operator, k: &[Vector]) -> Result<bool> {
    let kset = ConstraintSet::finite(k.to_vec())?;
    let s_t = svip(op, &kset)?.solutions;
    let m_t = mvip(op, &kset)?.solutions;
    let s_r = crate::vip::Solutions::Points(pts(polar_vip(op, &kset_points(&kset), Pseudo, Which::S)?));
    let m_r = crate::vip::Solutions::Points(pts(polar_vip(op, &kset_points(&kset), Pseudo, Which::M)?));
    Ok(s_t != s_r && m_t != m_r)
}

fn kset_points(k: &ConstraintSet) -> Vec<Vector> {
    match k {
        ConstraintSet::Finite(p) => p.clone(),
        ConstraintSet::Interval(_) => unreachable!("finite constraint sets only"),
    }
}

/// A two-point `K` from a violating pair of `T`, or of `T^rho` when `T` is pseudomonotone.
fn premax_suff_on(op: &Operator) -> Result<Trial> {
    let witness = match op {
        Operator::Finite(t) if t.dim() > 1 => {
            let c = classify(t);
            if !c.pseudomonotone {
                c.witness.pseudomonotone
            } else {
                // T^rho is sampled in higher dimension, so only non-pseudomonotone T counts
                return Ok(Trial::Vacuous);
            }
        }
        _ => {
            let t = op.to_pw()?;
            match pw_is_pseudomonotone(&t).witness {
                Some(w) => Some(w),
                None => pw_is_pseudomonotone(&polar(&t)?).witness,
            }
        }
    };
    let Some((a, b)) = witness else { return Ok(Trial::Vacuous) };
    let mut k = vec![a.point.clone(), b.point.clone()];
    k.sort();
    held(both_differ(op, &k)?, || json!({ "operator": op, "k": k }))
}

fn premax_suff(g: &mut Gen) -> Result<Trial> {
    let op: Operator = match g.int(0, 2) {
        0 => pw_any(g).into(),
        1 => g.finite(1, 4).into(),
        _ => g.finite(2, 4).into(),
    };
    premax_suff_on(&op)
}

fn fix_premax_suff() -> Result<Trial> {
    for op in [fixtures::two_point().into(), fixtures::ejem_variational().into(), fixtures::dmax_example().into()] {
        if let Trial::Failed(w) = premax_suff_on(&op)? {
            return fail(w);
        }
        if premax_suff_on(&op)? == Trial::Vacuous {
            return fail(json!({ "operator": op, "reason": "expected a non-pre-maximal fixture" }));
        }
    }
    Ok(Trial::Held)
}

type NamedFixture = (&'static str, fn() -> Result<Trial>);

fn worked_examples() -> Result<Trial> {
    let all: [NamedFixture; 8] = [
        ("FIX-CLOSURE", fix_closure),
        ("FIX-VARIATIONAL", fix_variational),
        ("FIX-EJEM1", fix_ejem1),
        ("FIX-TWO-POINT", fix_two_point),
        ("FIX-EJEM1-REMARK", fix_ejem1_remark),
        ("FIX-DMAX-EXAMPLE", fix_dmax_example),
        ("FIX-VIP-STRICT", fix_vip_strict),
        ("PREMAX-SUFF fixtures", fix_premax_suff),
    ];
    for (name, f) in all {
        if let Trial::Failed(w) = f()? {
            return fail(json!({ "fixture": name, "witness": w }));
        }
    }
    Ok(Trial::Held)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_complete() {
        let p = permutations(4);
        assert_eq!(p.len(), 24);
        assert_eq!(p.iter().collect::<BTreeSet<_>>().len(), 24);
    }

    #[test]
    fn fixtures_hold() {
        assert_eq!(worked_examples().unwrap(), Trial::Held);
    }

    #[test]
    fn the_full_plane_partner_is_unrelated() {
        let mut g = Gen::new(3);
        for _ in 0..200 {
            assert_ne!(polar_empty_full(&mut g).unwrap(), Trial::Failed(json!(null)));
        }
    }
}
