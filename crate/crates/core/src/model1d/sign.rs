//! Relations between 1-D covector atoms, decided from signs alone.
//!
//! For `(x, c)` and `(y, v)` on the line, `a = (x - y) v` and `b = (y - x) c`
//! are both proportional to `x - y`, so only `sigma = sign(x - y)` and the
//! covector data matter. The pseudomonotone and quasimonotone relations only
//! see the signs of `c` and `v`; the monotone one needs the values and, for
//! rays, a separate "for every scaling" argument.

use std::cmp::Ordering;

use super::values::Atom;
use crate::operator::{relate, Pair, PolarKind};
use crate::rational::Rational;

fn mul(a: Ordering, b: Ordering) -> Ordering {
    match (a, b) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
        (x, y) if x == y => Ordering::Greater,
        _ => Ordering::Less,
    }
}

/// Whether every instance of `(x, c)` is related to every instance of
/// `(y, v)` under `kind`, where `sigma = sign(x - y)`.
pub fn atoms_related(kind: PolarKind, sigma: Ordering, c: &Atom, v: &Atom) -> bool {
    if sigma == Ordering::Equal {
        return true;
    }
    let neg_sigma = sigma.reverse();
    match kind {
        PolarKind::Pseudo | PolarKind::Quasi => {
            let a = mul(sigma, v.sign());
            let b = mul(neg_sigma, c.sign());
            if kind == PolarKind::Pseudo {
                a == Ordering::Less || b == Ordering::Less || (a == Ordering::Equal && b == Ordering::Equal)
            } else {
                a != Ordering::Greater || b != Ordering::Greater
            }
        }
        // <x - y, c - v> >= 0 for every instance
        PolarKind::Mono => match (c, v) {
            (Atom::Point(c), Atom::Point(v)) => mul(sigma, (c - v).sign()) != Ordering::Less,
            (Atom::Point(c), Atom::Ray(h)) => {
                mul(sigma, h.sign()) == Ordering::Less && mul(sigma, c.sign()) != Ordering::Less
            }
            (Atom::Ray(g), Atom::Point(v)) => {
                mul(sigma, g.sign()) == Ordering::Greater && mul(sigma, v.sign()) != Ordering::Greater
            }
            (Atom::Ray(g), Atom::Ray(h)) => {
                mul(sigma, g.sign()) == Ordering::Greater && mul(sigma, h.sign()) == Ordering::Less
            }
        },
    }
}

fn scales_for(a: &Atom, other: &Atom) -> Vec<Rational> {
    match a {
        Atom::Point(_) => vec![Rational::one()],
        Atom::Ray(_) => {
            let size = other.representative().abs();
            let mut out = vec![Rational::one(), Rational::from_int(2), &size + &Rational::one()];
            if size.is_positive() {
                out.push(size.midpoint(&Rational::zero()));
            }
            out
        }
    }
}

/// Concrete pairs instantiating a failure of [`atoms_related`].
///
/// Rays are scaled so the returned pairs genuinely violate the relation.
pub fn instantiate_violation(kind: PolarKind, x: &Rational, c: &Atom, y: &Rational, v: &Atom) -> Option<(Pair, Pair)> {
    for s in scales_for(c, v) {
        for t in scales_for(v, c) {
            let p = Pair::scalar(x.clone(), &c.representative() * &s);
            let q = Pair::scalar(y.clone(), &v.representative() * &t);
            if !relate(&p, &q).expect("1-D pairs").holds(kind) {
                return Some((p, q));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model1d::values::Direction;
    use crate::rational::q;

    fn atoms() -> Vec<Atom> {
        let mut out: Vec<Atom> = [-2, -1, 0, 1, 3].iter().map(|&n| Atom::Point(q(n, 1))).collect();
        out.push(Atom::Point(q(1, 2)));
        out.push(Atom::Ray(Direction::Neg));
        out.push(Atom::Ray(Direction::Pos));
        out
    }

    /// Instances of an atom: the point itself or a spread of ray scalings.
    fn instances(a: &Atom) -> Vec<Rational> {
        match a {
            Atom::Point(r) => vec![r.clone()],
            Atom::Ray(d) => [q(1, 1000), q(1, 10), q(1, 2), q(1, 1), q(3, 1), q(1000, 1)]
                .iter()
                .map(|t| t * &d.generator())
                .collect(),
        }
    }

    #[test]
    fn sign_rules_agree_with_brute_force() {
        let xs = [q(0, 1), q(1, 1)];
        for kind in PolarKind::ALL {
            for c in atoms() {
                for v in atoms() {
                    for (x, y) in [(&xs[0], &xs[1]), (&xs[1], &xs[0]), (&xs[0], &xs[0])] {
                        let sigma = (x - y).sign();
                        let brute = instances(&c).iter().all(|ci| {
                            instances(&v).iter().all(|vi| {
                                relate(&Pair::scalar(x.clone(), ci.clone()), &Pair::scalar(y.clone(), vi.clone()))
                                    .unwrap()
                                    .holds(kind)
                            })
                        });
                        assert_eq!(atoms_related(kind, sigma, &c, &v), brute, "{kind:?} x={x} c={c:?} y={y} v={v:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn violations_are_instantiated() {
        let xs = [q(0, 1), q(1, 1)];
        for kind in PolarKind::ALL {
            for c in atoms() {
                for v in atoms() {
                    let sigma = (&xs[0] - &xs[1]).sign();
                    if !atoms_related(kind, sigma, &c, &v) {
                        let (p, r) = instantiate_violation(kind, &xs[0], &c, &xs[1], &v).expect("witness");
                        assert!(!relate(&p, &r).unwrap().holds(kind));
                    }
                }
            }
        }
    }
}
