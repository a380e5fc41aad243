use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),

    #[error("not cofinite: generators have gcd {gcd}")]
    NotCofinite { gcd: u64 },

    #[error("invalid gap set: {0}")]
    InvalidGapSet(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource limit exceeded: requested {requested}, limit {limit}")]
    ResourceExceeded { requested: u64, limit: u64 },

    #[error("curve not birational onto image: exponents have gcd {gcd}")]
    NotBirational { gcd: u64 },

    #[error("gonality formula valid only for unicuspidal curves")]
    Multicuspidal,

    #[error("rational normal curve; canonical model undefined here")]
    CanonicalModelUndefined,

    #[error("check skipped: {0}")]
    CheckSkipped(String),
}

pub type Result<T> = std::result::Result<T, Error>;
