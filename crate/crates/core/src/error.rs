use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op} is undefined on an empty point set")]
    EmptySet { op: &'static str },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("scale must be positive, got {0}")]
    NonPositiveDelta(Rational),

    #[error("scale {0} is outside the open interval (0, 1/2)")]
    DeltaOutOfRange(Rational),

    #[error("product of an empty list of sets")]
    MissingOperands,

    #[error("brute-force oracle accepts at most {limit} points, got {size}")]
    OracleLimit { size: usize, limit: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: u64,
        got: u64,
    },

    #[error("need at least {need} samples to fit a slope, got {got}")]
    TooFewSamples { need: usize, got: usize },

    #[error("covering count is zero at scale {0}")]
    ZeroCount(Rational),

    #[error("invalid scale schedule: {0}")]
    InvalidSchedule(String),

    #[error("scale {scale} probes below the set's resolution gap {gap}")]
    InvalidWindow {
        scale: Box<Rational>,
        gap: Box<Rational>,
    },

    #[error("value does not fit in a machine integer: {0}")]
    Overflow(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
