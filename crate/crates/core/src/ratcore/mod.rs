//! Exact rational scalars, vectors and matrices.
//!
//! Everything downstream (shadowing signs, quadratic forms, certificates)
//! is computed in these types; there is no floating-point path.

mod linalg;
mod matrix;
mod rational;
mod vector;

pub use linalg::{eval_quadratic, is_positive_definite, solve_linear, solve_system, SolveOutcome};
pub use matrix::RatMatrix;
pub use rational::{rat, Rational};
pub use vector::RatVector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RatError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a rational (expected \"p/q\" or \"p\")")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular (no pivot in column {pivot})")]
    Singular { pivot: usize },
}
