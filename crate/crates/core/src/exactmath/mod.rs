//! Exact scalar, polynomial and matrix arithmetic over the rationals.
//!
//! Everything downstream (recurrence terms, step symmetrics, closed-form
//! tuples) is computed with these types, so identities can be checked with
//! plain equality instead of tolerances.

mod matrix;
mod poly;
mod rational;

pub use matrix::Matrix;
pub use poly::Polynomial;
pub use rational::{binomial, parse_rational, parse_rational_list, rational_from_i64, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("diagonal entry {index} of the triangular system is zero")]
    SingularDiagonal { index: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}
