//! Equivariant index character of a weighted hypersurface ring as a truncated
//! Laurent series in `t`, its leading coefficients `a0`, `a1`, and a
//! lattice-point counting oracle for the quasi-regular grading.

mod bernoulli;
mod character;
mod laurent;
mod oracle;

pub use bernoulli::{bernoulli, bernoulli_numbers};
pub use character::{
    character_of, closed_form_a0, extract_a_coeffs, index_character, CharCoeffs, DEFAULT_ORDER,
};
pub use laurent::{factor_series, relation_series, series_mul, LinearForm, TruncatedLaurent};
pub use oracle::{hilbert_count_oracle, hilbert_series_expansion};

use crate::exactalg::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("charge is identically zero")]
    ZeroCharge,
    #[error("expected pole order {expected}, series starts at t^{found}")]
    PoleOrderMismatch { expected: i64, found: i64 },
    #[error("counting oracle needs a Brieskorn-Pham polynomial")]
    UnsupportedForOracle,
    #[error("truncation order {0} too small")]
    OrderTooSmall(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
