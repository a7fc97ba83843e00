//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in this module.

mod lattice;
mod matrix;
mod normal_form;

pub use lattice::{lattice_intersect, LatticeBasis};
pub use matrix::{IntMatrix, RatMatrix};
pub use normal_form::{
    elementary_divisors, hnf, hnf_basis, is_column_equivalent, snf, solve_integral,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left:?} against {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("lattice needs at least one generator")]
    EmptyGenerators,
    #[error("matrix must have at least one row")]
    ZeroRows,
    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
}
