use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid projective point [0:0]")]
    InvalidPoint,
    #[error("resultant of two zero polynomials")]
    BothZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("interval does not bracket a root")]
    NoSignChange,
    #[error("root finder did not converge after {iterations} iterations")]
    NonConvergence {
        iterations: usize,
        partial: Vec<Complex64>,
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("determinant formula produced a non-integer value {0}")]
    NonIntegerResult(String),
    #[error("unknown embedding set {0:?}")]
    UnknownName(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial is not monic")]
    NonMonic,
    #[error("point is an indeterminacy point of the involution")]
    Indeterminate,
    #[error("slices share a common component: {0}")]
    SharedComponent(String),
    #[error("class is not in the span of the basis")]
    NotInSpan,
    #[error("basis has a singular Gram matrix")]
    SingularGram,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
