//! Exact obstruction calculus for extremal Sasaki metrics on links of weighted
//! homogeneous hypersurface singularities.
//!
//! * [`exactalg`]: rationals, polynomials and rational functions in the Reeb parameters.
//! * [`charseries`]: the equivariant index character and its leading coefficients.
//! * [`invariants`]: Futaki invariants, the extremal field and normal-cone data.
//! * [`linkgeom`]: links, Sasaki cones, verdicts and the family catalog.

pub mod charseries;
pub mod exactalg;
pub mod invariants;
pub mod linkgeom;
