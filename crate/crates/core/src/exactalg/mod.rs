//! Exact arithmetic kernel: rationals, sparse multivariate polynomials in the
//! Reeb parameters `b0..br`, reduced rational functions and exact linear solves.

mod gcd;
mod linsolve;
mod poly;
mod ratfunc;
mod rational;

pub use gcd::gcd;
pub use linsolve::solve_linear;
pub use poly::{Monomial, MultiPoly};
pub use ratfunc::RatFunc;
pub use rational::{
    binomial, factorial, int, is_positive, parse_rational, rat, rpow, ParseRationalError, Rational,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function has a pole at the evaluation point")]
    PoleAtPoint,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
