use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by an interval containing zero")]
    DivisionByZeroInterval,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("integrand is not eventually decaying: {0}")]
    NotDecaying(String),
    #[error("subdivision budget exhausted after {0} steps")]
    DepthExhausted(u64),
    #[error("T interval straddles the range boundary at log T = {0}")]
    RangeStraddle(String),
    #[error("no crossover: threshold sigma is not positive")]
    NoCrossover,
    #[error("no sign change in the search window: {0}")]
    BracketFailure(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("exponent is singular at sigma = 1")]
    SingularExponent,
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("argument {0} exceeds the cap {1}")]
    CapExceeded(u64, u64),
    #[error("pole of the Gamma function at {0}")]
    PoleError(String),
    #[error("invalid precision: {0}")]
    InvalidPrecision(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
