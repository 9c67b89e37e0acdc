use thiserror::Error;

/// Errors raised by the library. Every variant describes a violated
/// precondition of the called operation; none of them is transient.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} exceeds the supported maximum of {max}", max = crate::cube::MAX_DIM)]
    DimensionTooLarge(usize),

    #[error("index {index} is outside [1, {dim}]")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid weight spec: {0}")]
    InvalidSpec(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("{0} is not a member of any H_t")]
    NotInHt(String),

    #[error("monomial {0} is standard; no vanishing polynomial has it as leading monomial")]
    MonomialIsStandard(String),

    #[error("monomial {0} is not square-free")]
    NotSquareFree(String),

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("{0} is not a subset of {1}")]
    NotSubset(String, String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
