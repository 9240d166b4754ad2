//! Exact computations with generalized monotone operators: pairwise
//! relations, monotone/pseudomonotone/quasimonotone polars, the greatest
//! equivalent pseudomonotone operator `T̂`, maximal extensions inside finite
//! universes, and Stampacchia/Minty variational inequalities.

pub mod conic;
pub mod error;
pub mod fixtures;
pub mod harness;
pub mod io;
pub mod maximality;
pub mod model1d;
pub mod operator;
pub mod polar;
pub mod rational;
pub mod vector;
pub mod vip;

pub use error::{PolarError, Result};
pub use operator::{
    classify, relate, scale_covectors, translate, Classification, FiniteOperator, Pair, PolarKind, RelationVerdict,
};
pub use rational::Rational;
pub use vector::{pairing, Vector};
