//! Exact Laurent-polynomial arithmetic, jets at `t = 1`, and fraction-free
//! linear algebra over integral domains.

mod jet;
mod laurent;
mod matrix;

pub use jet::JetAtOne;
pub use laurent::{Exponent, LaurentPoly, Valuation};
pub use matrix::{bareiss_det, fraction_free_rank, ExactDomain, IntMatrix, Matrix, PolyMatrix};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("Laurent polynomial rings need at least one variable")]
    ZeroArity,
    #[error("expected a univariate polynomial, got arity {0}")]
    NotUnivariate(usize),
    #[error("division is not exact")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
