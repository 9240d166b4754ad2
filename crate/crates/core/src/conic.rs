//! Exact membership in a finitely generated convex cone.
//!
//! By Carathéodory's theorem `v ∈ cone(G)` iff `v` is a nonnegative
//! combination of some linearly independent subset of `G`, so it is enough
//! to solve a few small exact linear systems.

use crate::error::{PolarError, Result};
use crate::rational::Rational;
use crate::vector::Vector;

/// Upper bound on the number of generator subsets examined.
pub const SUBSET_LIMIT: usize = 200_000;

/// Solves `cols · λ = v` exactly. Returns `None` when inconsistent or when
/// the columns are linearly dependent.
fn solve_independent(cols: &[&Vector], v: &Vector) -> Option<Vec<Rational>> {
    let n = v.dim();
    let k = cols.len();
    // augmented n x (k + 1)
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c.coords()[r].clone()).collect();
            row.push(v.coords()[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..k {
        let pr = (pivot_row..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, pr);
        let inv = m[pivot_row][col].recip().expect("nonzero pivot");
        for v in &mut m[pivot_row][col..=k] {
            *v = &*v * &inv;
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row[col..=k].iter_mut().zip(&pivot[col..=k]) {
                    *v = &*v - &(&f * p);
                }
            }
        }
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Whether `v` lies in the closed cone generated by `gens` (`{0}` when empty).
pub fn in_cone(v: &Vector, gens: &[Vector]) -> Result<bool> {
    if v.is_zero() {
        return Ok(true);
    }
    let gens: Vec<&Vector> = gens.iter().filter(|g| !g.is_zero()).collect();
    for g in &gens {
        g.check_dim(v.dim())?;
    }
    let max_k = v.dim().min(gens.len());
    let total: usize = (1..=max_k).map(|k| binomial(gens.len(), k)).sum();
    if total > SUBSET_LIMIT {
        return Err(PolarError::Unsupported(format!(
            "cone membership would examine {total} generator subsets (limit {SUBSET_LIMIT})"
        )));
    }
    let mut idx = Vec::with_capacity(max_k);
    Ok(search(&gens, v, 0, max_k, &mut idx))
}

fn search(gens: &[&Vector], v: &Vector, start: usize, max_k: usize, idx: &mut Vec<usize>) -> bool {
    if !idx.is_empty() {
        let cols: Vec<&Vector> = idx.iter().map(|&i| gens[i]).collect();
        if let Some(lambda) = solve_independent(&cols, v) {
            if lambda.iter().all(|l| !l.is_negative()) {
                return true;
            }
        }
    }
    if idx.len() == max_k {
        return false;
    }
    for i in start..gens.len() {
        idx.push(i);
        if search(gens, v, i + 1, max_k, idx) {
            return true;
        }
        idx.pop();
    }
    false
}
