use thiserror::Error;

/// Errors produced by the solver laboratory.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("bit ({j}, {i}) is outside the game matrix of size n = {n} (need 0 <= i < j <= n)")]
    IndexOutOfRange { j: usize, i: usize, n: usize },

    #[error("malformed header: {0}")]
    MalformedHeader(String),

    #[error("bad payload length: expected {expected} hex digits, found {found}")]
    BadLength { expected: usize, found: usize },

    #[error("non-hex digit {found:?} at payload offset {offset}")]
    NonHexDigit { offset: usize, found: char },

    #[error("non-zero padding bits after the last meaningful bit")]
    NonZeroPadding,

    #[error("trailing garbage after the payload line")]
    TrailingGarbage,

    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(f64),

    #[error("infeasible LSB configuration n = {n}, k = {k}: {reason}")]
    InfeasibleLsb { n: usize, k: usize, reason: String },

    #[error("game with n = 0 has no bits to flip")]
    NoBits,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
