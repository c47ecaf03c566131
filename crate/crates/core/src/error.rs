use thiserror::Error;

/// Errors raised by the algebra, code and enumerator routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-unit leading coefficient")]
    NonUnitLeadingCoefficient,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not primitive: {0}")]
    NotPrimitive(String),
    #[error("reciprocal undefined: constant term is zero")]
    ReciprocalUndefined,
    #[error("h does not divide X^n - 1")]
    InexactDivision,
    #[error("incompatible rings")]
    IncompatibleRings,
    #[error("trace left a non-constant coordinate (broken ring or Frobenius)")]
    TraceNotScalar,
    #[error("generator too long: degree {degree} for length {n}")]
    GeneratorTooLong { degree: usize, n: usize },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("code too large to enumerate: {size} words exceeds cap {cap}")]
    TooLarge { size: String, cap: u64 },
    #[error("odd length {0}: the swap map needs an even length")]
    OddLength(usize),
    #[error("order r = {r} out of range for m = {m}")]
    OrderOutOfRange { r: usize, m: usize },
    #[error("input is not a valid code enumerator: {0}")]
    InvalidEnumerator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
