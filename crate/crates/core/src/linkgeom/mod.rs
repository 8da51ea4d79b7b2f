//! Links of weighted homogeneous polynomials `f'(z_0..z_k) + sum of squares`,
//! their Sasaki cones and Calabi-Yau locus, the obstruction verdicts, the
//! family catalog and the Kervaire-Milnor order helper.

mod catalog;
mod kervaire;
mod link;
mod verdict;

pub use catalog::{catalog, family_ids, table_rows, CatalogEntry, Table};
pub use kervaire::bp_group_order;
pub use link::{LinkKind, ReebVector, WeightedLink};
pub use verdict::{
    gen_lich_obstruction, lichnerowicz_check, whp_obstruction, ObstructionVerdict, VerdictTag,
};

use crate::charseries::SeriesError;
use crate::invariants::InvariantError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("at least one inner weight is required")]
    EmptyWeights,
    #[error("weights and degree must be positive")]
    NonPositive,
    #[error("weight {weight} equals the degree {degree}: f has a linear factor")]
    LinearFactor { weight: u64, degree: u64 },
    #[error("weight {weight} violates 2w < d' = {degree}")]
    WeightTooLarge { weight: u64, degree: u64 },
    #[error("quadratic tail of length {0} is shorter than 2")]
    TailTooShort(usize),
    #[error("exponent {0} is not allowed in a Brieskorn-Pham polynomial")]
    InvalidExponent(u32),
    #[error("Fano index {0} is not positive")]
    NotPositiveCase(i64),
    #[error("coordinate {index} is not an inner coordinate (k = {k})")]
    CoordinateOutOfRange { index: usize, k: usize },
    #[error("Reeb vector has {found} components, link needs {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("parameters out of range: {0}")]
    ParameterRange(String),
    #[error("verdicts disagree: {0}")]
    InconsistentVerdict(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Invariants(#[from] InvariantError),
}
