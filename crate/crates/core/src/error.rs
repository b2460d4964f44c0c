use thiserror::Error;

/// Errors raised by the algebra kernels and pipelines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    #[error("monomial width mismatch: {0} vs {1} variables")]
    WidthMismatch(usize, usize),

    #[error("too many variables: {0} (at most {max})", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },

    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),

    #[error("size guard exceeded: {0}")]
    Guard(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("invalid input: {0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
