//! Exact linear algebra over any [`Field`](crate::field::Field): Gauss–Jordan
//! elimination, RREF subspaces, sparse multivariate polynomials and symbolic
//! determinants of linear pencils.

mod matrix;
mod pencil;
mod poly;
mod search;
mod subspace;

pub use matrix::{Matrix, RrefResult};
pub use pencil::{pencil_det, GramPencil, MAX_COFACTOR_DIM, MAX_UNKNOWNS};
pub use poly::{Monomial, MultiPoly};
pub use search::{nonvanishing_point, ExtensionPoint, PointSearch, MAX_EXHAUSTIVE_POINTS};
pub use subspace::Subspace;

use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("ambient dimensions differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("block of dimension {0} is too large for cofactor expansion")]
    DimensionTooLarge(usize),
    #[error("{0} unknowns exceed the pencil limit")]
    TooManyUnknowns(usize),
    #[error("exhaustive search over {0} points refused")]
    SearchSpaceTooLarge(u128),
    #[error(transparent)]
    Field(#[from] FieldError),
}
