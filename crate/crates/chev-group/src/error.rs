use chev_ring::RingError;
use chev_roots::SystemType;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{system} needs 1/{inverse}, which is not a unit in {ring}")]
    MissingInverse { system: SystemType, inverse: i64, ring: String },
    #[error("parameter {0} must be a unit")]
    NotUnit(String),
    #[error("{0} is not a root of this system")]
    NotARoot(String),
    #[error("no value bound for pattern `{0}`")]
    UnknownPattern(String),
    #[error("matrix is not invertible over the ring")]
    Singular,
    #[error("cannot parse element `{0}`: {1}")]
    BadElement(String, String),
}

pub type Result<T> = std::result::Result<T, GroupError>;
