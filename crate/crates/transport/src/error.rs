use thiserror::Error;

#[derive(Debug, Error)]
pub enum TransportError {
    #[error("invalid cdf: {0}")]
    InvalidCdf(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sample-set size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("instance size {0} exceeds exact-matching cap {1}")]
    MatchingBudget(usize, usize),

    #[error(transparent)]
    Net(#[from] pushforge_net::NetError),
}
