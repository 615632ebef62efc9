use thiserror::Error;

use crate::cone::ProjectionDiagnostics;

/// Errors raised by the numeric core.
#[derive(Debug, Error)]
pub enum EdmError {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("need at least 2 objects, got {0}")]
    TooSmall(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not symmetric at ({i}, {j}): {a} != {b}")]
    NotSymmetric { i: usize, j: usize, a: f64, b: f64 },

    #[error("diagonal entry ({i}, {i}) is {value}, expected 0")]
    NotHollow { i: usize, value: f64 },

    #[error("non-finite entry at ({i}, {j})")]
    NonFinite { i: usize, j: usize },

    #[error("not a Euclidean distance matrix: smallest kernel eigenvalue {min_eig:e} below -{tol:e} x {scale:e}")]
    NotEdm { min_eig: f64, tol: f64, scale: f64 },

    #[error("kernel is not positive semidefinite: smallest eigenvalue {min_eig:e}")]
    NotPsd { min_eig: f64 },

    #[error("kernel rows do not sum to zero: max |K1| = {max_row_sum:e}")]
    NotCentered { max_row_sum: f64 },

    #[error("reference matrix is all zero")]
    ZeroReference,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("Dykstra projection did not converge after {} cycles (last step {:e})", .0.cycles, .0.delta_last)]
    NotConverged(Box<ProjectionDiagnostics>),
}

pub type Result<T> = std::result::Result<T, EdmError>;
