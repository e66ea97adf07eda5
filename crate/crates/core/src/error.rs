use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group kind mismatch: {left} vs {right}")]
    KindMismatch { left: String, right: String },

    #[error("module shape mismatch: rank {left} vs rank {right}")]
    ShapeMismatch { left: usize, right: usize },

    #[error("leading term of the zero element is undefined")]
    ZeroElement,

    #[error("ball radius {radius} exceeds the configured limit {limit}")]
    RadiusTooLarge { radius: u32, limit: u32 },

    #[error("element has {got} coordinates, group {kind} expects {expected}")]
    Arity { kind: String, expected: usize, got: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not in the multiplicative set generated by the configured primes")]
    NotInS(String),

    #[error("stage {stage} is free; denominator {denominator} is not admitted")]
    FlavorViolation { stage: usize, denominator: String },

    #[error("stage {stage} exceeds tower height {height}")]
    StageOutOfRange { stage: usize, height: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }
}
