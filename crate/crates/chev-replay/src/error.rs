use chev_group::GroupError;
use chev_ring::RingError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("malformed fixture `{0}`: {1}")]
    Fixture(String, String),
    #[error("unknown step `{0}`")]
    UnknownStep(String),
}

pub type Result<T> = std::result::Result<T, ReplayError>;
