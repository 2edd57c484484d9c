use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a unit: {0}")]
    NotUnit(String),
    #[error("index error: {0}")]
    Index(String),
    #[error("size mismatch: {0}")]
    Size(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("insufficient Y-divisibility: {0}")]
    Divisibility(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
