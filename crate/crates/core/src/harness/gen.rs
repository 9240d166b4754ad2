//! Seeded instance generation.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{PolarError, Result};
use crate::fixtures;
use crate::io::Operator;
use crate::model1d::{Direction, Endpoint, Interval1D, Piece, PiecewiseOperator1D, ValueSet1D};
use crate::operator::{related, FiniteOperator, Pair, PolarKind};
use crate::rational::Rational;
use crate::vector::Vector;

/// Deterministic source of small rationals, vectors and operators.
pub struct Gen {
    rng: ChaCha8Rng,
    range: i64,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed), range: 3 }
    }

    pub fn with_range(seed: u64, range: i64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed), range: range.max(1) }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.random_range(0..len)
    }

    /// True with probability `num / den`.
    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.random_ratio(num, den)
    }

    /// Value in `[-range, range]` with denominator 1, 2 or 3.
    pub fn rational(&mut self) -> Rational {
        let den = self.int(1, 3);
        let num = self.int(-self.range * den, self.range * den);
        Rational::new(num, den).expect("nonzero denominator")
    }

    /// Integer-valued in `[-range, range]`.
    pub fn small_int(&mut self) -> Rational {
        Rational::from_int(self.int(-self.range, self.range))
    }

    /// Strictly positive, at most `range`.
    pub fn positive(&mut self) -> Rational {
        let den = self.int(1, 3);
        let num = self.int(1, self.range * den);
        Rational::new(num, den).expect("nonzero denominator")
    }

    /// Strictly between 0 and 1.
    pub fn unit_open(&mut self) -> Rational {
        let den = self.int(2, 6);
        let num = self.int(1, den - 1);
        Rational::new(num, den).expect("nonzero denominator")
    }

    /// In `[0, 1]`, endpoints included.
    pub fn unit_closed(&mut self) -> Rational {
        let den = self.int(1, 6);
        let num = self.int(0, den);
        Rational::new(num, den).expect("nonzero denominator")
    }

    pub fn dim(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    pub fn vector(&mut self, dim: usize) -> Vector {
        // a quarter of the time use integer coordinates so that collinear and
        // orthogonal configurations come up often
        let ints = self.chance(1, 4);
        let coords = (0..dim).map(|_| if ints { self.small_int() } else { self.rational() }).collect();
        Vector::new(coords).expect("positive dimension")
    }

    pub fn covector(&mut self, dim: usize) -> Vector {
        if self.chance(1, 6) {
            Vector::zero(dim)
        } else {
            self.vector(dim)
        }
    }

    pub fn pair(&mut self, dim: usize) -> Pair {
        let x = self.vector(dim);
        let c = self.covector(dim);
        Pair::new(x, c).expect("same dimension")
    }

    /// A pair biased towards the data of `op`: its points, covectors, zero.
    pub fn pair_near(&mut self, op: &FiniteOperator) -> Pair {
        let dim = op.dim();
        let g = op.graph();
        let x =
            if !g.is_empty() && self.chance(1, 3) { g[self.index(g.len())].point.clone() } else { self.vector(dim) };
        let c = match self.int(0, 5) {
            0 => Vector::zero(dim),
            1 if !g.is_empty() => g[self.index(g.len())].covector.clone(),
            2 if !g.is_empty() => g[self.index(g.len())].covector.scale(&self.positive()),
            _ => self.vector(dim),
        };
        Pair::new(x, c).expect("same dimension")
    }

    /// Up to `max_size` random pairs; a third of new pairs reuse an earlier point.
    pub fn finite(&mut self, dim: usize, max_size: usize) -> FiniteOperator {
        let size = self.int(0, max_size as i64) as usize;
        let mut graph: Vec<Pair> = Vec::new();
        for _ in 0..size {
            let x = if !graph.is_empty() && self.chance(1, 3) {
                graph[self.index(graph.len())].point.clone()
            } else {
                self.vector(dim)
            };
            let p = Pair::new(x, self.covector(dim)).expect("same dimension");
            if !graph.contains(&p) {
                graph.push(p);
            }
        }
        FiniteOperator::new(dim, graph).expect("deduplicated")
    }

    /// Random pairs accepted only while the operator stays in the class.
    pub fn finite_class(&mut self, dim: usize, max_size: usize, kind: PolarKind) -> FiniteOperator {
        let target = self.int(0, max_size as i64) as usize;
        let mut graph: Vec<Pair> = Vec::new();
        let mut attempts = 0;
        while graph.len() < target && attempts < 8 * max_size.max(1) {
            attempts += 1;
            let x = if !graph.is_empty() && self.chance(1, 4) {
                graph[self.index(graph.len())].point.clone()
            } else {
                self.vector(dim)
            };
            let p = Pair::new(x, self.covector(dim)).expect("same dimension");
            if !graph.contains(&p) && graph.iter().all(|g| related(&p, g, kind)) {
                graph.push(p);
            }
        }
        FiniteOperator::new(dim, graph).expect("deduplicated")
    }

    /// Either class member or arbitrary, with even odds.
    pub fn finite_mixed(&mut self, dim: usize, max_size: usize) -> FiniteOperator {
        if self.chance(1, 2) {
            self.finite_class(dim, max_size, PolarKind::Pseudo)
        } else {
            self.finite(dim, max_size)
        }
    }

    /// Endpoint values come from a coarse grid so pieces touch and overlap.
    fn grid_value(&mut self) -> Rational {
        Rational::new(self.int(-4, 4), 2).expect("nonzero denominator")
    }

    pub fn interval(&mut self) -> Interval1D {
        loop {
            let a = self.grid_value();
            let b = self.grid_value();
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            let lo = match self.int(0, 5) {
                0 => Endpoint::neg_inf(),
                1 | 2 => Endpoint::open(a),
                _ => Endpoint::closed(a),
            };
            let hi = match self.int(0, 5) {
                0 => Endpoint::pos_inf(),
                1 | 2 => Endpoint::open(b),
                _ => Endpoint::closed(b),
            };
            if let Ok(i) = Interval1D::new(lo, hi) {
                return i;
            }
        }
    }

    /// A bounded interval, possibly a single point.
    pub fn bounded_interval(&mut self) -> Interval1D {
        loop {
            let i = self.interval();
            if i.lo().value.finite().is_some() && i.hi().value.finite().is_some() {
                return i;
            }
        }
    }

    pub fn value_set(&mut self) -> ValueSet1D {
        loop {
            let n = self.int(0, 2);
            let points: Vec<Rational> =
                (0..n).map(|_| if self.chance(1, 3) { Rational::zero() } else { self.small_int() }).collect();
            let mut rays = Vec::new();
            if self.chance(1, 5) {
                rays.push(Direction::Pos);
            }
            if self.chance(1, 5) {
                rays.push(Direction::Neg);
            }
            let v = ValueSet1D::new(points, rays);
            if !v.is_empty() {
                return v;
            }
        }
    }

    pub fn pw1d(&mut self, max_pieces: usize) -> PiecewiseOperator1D {
        let n = self.int(1, max_pieces.max(1) as i64) as usize;
        let pieces = (0..n)
            .map(|_| {
                let i = if self.chance(1, 4) { Interval1D::point(self.grid_value()) } else { self.interval() };
                Piece::new(i, self.value_set())
            })
            .collect();
        PiecewiseOperator1D::new(pieces)
    }

    /// Pieces covering the whole line.
    pub fn pw1d_full_domain(&mut self, max_pieces: usize) -> PiecewiseOperator1D {
        let mut pw = self.pw1d(max_pieces.saturating_sub(1).max(1));
        let mut pieces = pw.pieces().to_vec();
        pieces.push(Piece::new(Interval1D::real_line(), self.value_set()));
        pw = PiecewiseOperator1D::new(pieces);
        pw
    }

    /// Pieces whose union is a single interval.
    pub fn pw1d_convex_domain(&mut self, max_pieces: usize) -> PiecewiseOperator1D {
        let hull = self.interval();
        let n = self.int(0, max_pieces.saturating_sub(1) as i64) as usize;
        let mut pieces = vec![Piece::new(hull.clone(), self.value_set())];
        for _ in 0..n {
            if let Some(sub) = self.interval().intersect(&hull) {
                pieces.push(Piece::new(sub, self.value_set()));
            }
        }
        PiecewiseOperator1D::new(pieces)
    }

    /// Pieces accepted only while the operator stays pseudomonotone.
    pub fn pw1d_pseudo(&mut self, max_pieces: usize) -> PiecewiseOperator1D {
        let target = self.int(1, max_pieces.max(1) as i64) as usize;
        let mut pieces = Vec::new();
        for _ in 0..4 * target {
            if pieces.len() == target {
                break;
            }
            let i = if self.chance(1, 3) { Interval1D::point(self.grid_value()) } else { self.interval() };
            let mut trial = pieces.clone();
            trial.push(Piece::new(i, self.value_set()));
            let op = PiecewiseOperator1D::new(trial.clone());
            if crate::model1d::pw_is_pseudomonotone(&op).holds {
                pieces = trial;
            }
        }
        PiecewiseOperator1D::new(pieces)
    }
}

/// Instance families accepted by [`generate_instance`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    RandomFinite { dim: usize, size: usize, range: i64 },
    RandomPseudomonotoneFinite { dim: usize, size: usize },
    RandomMonotoneFinite { dim: usize, size: usize },
    Fixture { id: String },
    RandomPw1d { pieces: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::RandomFinite { dim, size, range } => write!(f, "random-finite({dim},{size},{range})"),
            Family::RandomPseudomonotoneFinite { dim, size } => write!(f, "random-pseudomonotone-finite({dim},{size})"),
            Family::RandomMonotoneFinite { dim, size } => write!(f, "random-monotone-finite({dim},{size})"),
            Family::Fixture { id } => write!(f, "paper-fixture({id})"),
            Family::RandomPw1d { pieces } => write!(f, "random-pw1d({pieces})"),
        }
    }
}

impl FromStr for Family {
    type Err = PolarError;

    /// `name` or `name(arg,...)`; omitted arguments take defaults.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], s[i + 1..s.len() - 1].split(',').map(str::trim).collect()),
            Some(_) => return Err(PolarError::UnknownFamily(s.to_string())),
            None => (s, Vec::new()),
        };
        let args: Vec<&str> = args.into_iter().filter(|a| !a.is_empty()).collect();
        let num = |i: usize, default: i64| -> Result<i64> {
            match args.get(i) {
                None => Ok(default),
                Some(a) => a.parse().map_err(|_| PolarError::UnknownFamily(s.to_string())),
            }
        };
        let positive = |v: i64| -> Result<usize> {
            usize::try_from(v).ok().filter(|&d| d > 0).ok_or_else(|| PolarError::UnknownFamily(s.to_string()))
        };
        let size = |v: i64| usize::try_from(v).map_err(|_| PolarError::UnknownFamily(s.to_string()));
        match name {
            "random-finite" => Ok(Family::RandomFinite {
                dim: positive(num(0, 1)?)?,
                size: size(num(1, 4)?)?,
                range: positive(num(2, 3)?)? as i64,
            }),
            "random-pseudomonotone-finite" => {
                Ok(Family::RandomPseudomonotoneFinite { dim: positive(num(0, 1)?)?, size: size(num(1, 4)?)? })
            }
            "random-monotone-finite" => {
                Ok(Family::RandomMonotoneFinite { dim: positive(num(0, 1)?)?, size: size(num(1, 4)?)? })
            }
            "random-pw1d" => {
                let pieces = positive(num(0, 4)?)?;
                if pieces > 4 {
                    return Err(PolarError::UnknownFamily(format!("{s}: at most 4 pieces")));
                }
                Ok(Family::RandomPw1d { pieces })
            }
            "paper-fixture" => match args.first() {
                Some(id) if fixtures::fixture(id).is_some() => Ok(Family::Fixture { id: id.to_string() }),
                _ => Err(PolarError::UnknownFamily(s.to_string())),
            },
            _ => Err(PolarError::UnknownFamily(s.to_string())),
        }
    }
}

pub fn generate_instance(family: &Family, seed: u64) -> Result<Operator> {
    let op: Operator = match family {
        Family::RandomFinite { dim, size, range } => {
            let mut g = Gen::with_range(seed, *range);
            g.finite(*dim, *size).into()
        }
        Family::RandomPseudomonotoneFinite { dim, size } => {
            Gen::new(seed).finite_class(*dim, *size, PolarKind::Pseudo).into()
        }
        Family::RandomMonotoneFinite { dim, size } => Gen::new(seed).finite_class(*dim, *size, PolarKind::Mono).into(),
        Family::Fixture { id } => {
            fixtures::fixture(id).ok_or_else(|| PolarError::UnknownFamily(format!("paper-fixture({id})")))?
        }
        Family::RandomPw1d { pieces } => Gen::new(seed).pw1d(*pieces).into(),
    };
    Ok(op)
}

/// Per-trial seed from a base seed, a check name and a trial index.
pub fn derive_seed(seed: u64, name: &str, trial: u64) -> u64 {
    // FNV-1a over the name, then a splitmix64 finalizer
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut z = seed ^ h ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
