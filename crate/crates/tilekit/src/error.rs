//! Crate-wide error type.

use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A power with a negative exponent was requested of a polynomial that is
    /// not a single monomial.
    #[error("negative power of a non-monomial polynomial")]
    NegativePowerOfPolynomial,
    /// Zero was raised to a negative power, or a denominator vanished.
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    /// An evaluation left a variable without a value.
    #[error("variable {0} has no assigned value")]
    UnassignedVariable(String),
    /// Two color tuples of different lengths were compared.
    #[error("color count mismatch: {0} vs {1}")]
    ColorMismatch(usize, usize),
    /// A partition does not fit the requested Maya window.
    #[error("partition {0} does not fit a window of width {1} with zero at {2}")]
    WindowFit(String, usize, usize),
    /// Exhaustive work larger than the configured cap was requested.
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    /// A domino tiling, partition sequence, or path family is malformed.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// The requested operation needs an interaction count it does not have.
    #[error("interaction precondition failed: {0}")]
    Interactions(String),
    /// A block passed to a flip is not a flippable 2x2 square.
    #[error("block at ({0},{1}) is not flippable")]
    NotFlippable(i32, i32),
}

/// Shorthand used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
