use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid ring parameters: {0}")]
    BadParameters(String),
    #[error("{0} is not a unit in {1}")]
    RequiredInverse(i64, String),
    #[error("cannot parse ring descriptor `{0}`")]
    BadDescriptor(String),
    #[error("cannot parse ring element `{0}`: {1}")]
    BadElement(String, String),
    #[error("operands belong to different rings ({0} vs {1})")]
    MixedRings(String, String),
    #[error("element is not a unit")]
    NonUnit,
    #[error("operation requires a {0}")]
    WrongKind(&'static str),
    #[error("matrix is not invertible over the ring")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, RingError>;
