use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundError {
    #[error("invalid bound parameter: {0}")]
    InvalidParameter(String),
}
