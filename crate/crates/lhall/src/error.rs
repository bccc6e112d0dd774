use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cap mismatch: {0} vs {1}")]
    CapMismatch(usize, usize),
    #[error("matrix is not square (or ragged)")]
    NonSquareMatrix,
    #[error("series factor 1 - c*q^{0} is not an invertible power series")]
    NonInvertibleFactor(i64),
    #[error("invalid rational literal: {0}")]
    BadRational(String),
    #[error("invalid partition literal: {0}")]
    BadPartition(String),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { inner: String, outer: String },
    #[error("sequence violates the {0} chain of inequalities")]
    InvalidChain(&'static str),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("exact division failed: nonzero remainder")]
    InexactDivision,
    #[error("vanishing denominator at the chosen parameters: {0}")]
    VanishingDenominator(String),
    #[error("series tail bound does not certify convergence: {0}")]
    Divergent(String),
    #[error("tableau type mismatch: expected {expected}, got {got}")]
    TypeMismatch { expected: String, got: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
