use thiserror::Error;

#[derive(Debug, Error)]
pub enum NetError {
    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    DimensionMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },

    #[error("non-finite value encountered during {0}")]
    NonFinite(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation requires flavor {required:?}, network is {actual:?}")]
    WrongFlavor {
        required: crate::Flavor,
        actual: crate::Flavor,
    },

    #[error("region budget of {budget} exceeded")]
    RegionBudget { budget: usize },

    #[error("unsupported network file version {0} (expected {})", crate::FORMAT_VERSION)]
    UnsupportedVersion(u32),

    #[error("malformed network file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
