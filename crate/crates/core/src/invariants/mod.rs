//! Futaki-type invariants of product and normal-cone test configurations,
//! computed exactly from `a0`, `a1` and their derivatives along the torus.
//!
//! All dimension-indexed constants are written with `m = dim_y` (the cone's
//! complex dimension, `n + 1` in the Sasakian index convention); see [`Dims`].

mod futaki;
mod normal_cone;

pub use futaki::{
    calabi_lb2_rhs, calabi_lower_bound, coef_derivatives, extremal_field, futaki_product,
    gram_matrix, inner_product, relative_futaki_product, DirectionVector, FutakiData, PointJets,
    SignedSqrt,
};
pub use normal_cone::{
    normal_cone_calabi_bound, normal_cone_futaki, normal_cone_futaki_general,
    normal_cone_futaki_tangent_form, normal_cone_futaki_with_chi, normal_cone_norm_sq,
    NormalConeFutaki,
};

use crate::exactalg::{int, AlgebraError, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("dim_y = {0} is too small for a1-derived quantities")]
    DimensionTooSmall(usize),
    #[error("Reeb vector is not on the Calabi-Yau locus")]
    NotOnSigma,
    #[error("weight vanishes at the Reeb vector")]
    ZeroCharge,
    #[error("direction has zero norm")]
    ZeroNorm,
    #[error("Gram matrix is singular")]
    SingularSystem,
    #[error("expected {expected} components, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Algebra(AlgebraError),
}

impl From<AlgebraError> for InvariantError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::SingularSystem => InvariantError::SingularSystem,
            other => InvariantError::Algebra(other),
        }
    }
}

/// The one place where `dim_y` becomes the constants of the formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dims {
    pub dim_y: usize,
}

impl Dims {
    pub fn new(dim_y: usize) -> Self {
        Dims { dim_y }
    }

    /// `m`
    pub fn m(&self) -> Rational {
        int(self.dim_y as i64)
    }

    /// `m - 1`, the divisor for `b1`.
    pub fn m_minus_1(&self) -> Result<Rational, InvariantError> {
        if self.dim_y < 2 {
            return Err(InvariantError::DimensionTooSmall(self.dim_y));
        }
        Ok(int(self.dim_y as i64 - 1))
    }

    /// `m (m + 1)`, the divisor for `c0`.
    pub fn m_m_plus_1(&self) -> Rational {
        int((self.dim_y * (self.dim_y + 1)) as i64)
    }

    /// `m (m - 1) / 2`, the Calabi-Yau ratio `a1 / a0` on the locus.
    pub fn cy_ratio(&self) -> Rational {
        Rational::new(
            ((self.dim_y * self.dim_y.saturating_sub(1)) as i64).into(),
            2.into(),
        )
    }
}
