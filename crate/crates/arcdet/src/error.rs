//! Error taxonomy shared by all modules.

/// Library-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Precondition violation on an argument.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Input lies outside the mathematical domain of the operation; carries
    /// the index of the offending pivot/eigenvalue.
    #[error("domain error at index {index}: {message}")]
    Domain { index: usize, message: String },
    /// The computation is beyond the precision budget; carries the failing
    /// degree or pivot index.
    #[error("conditioning failure at index {index}: {message}")]
    Conditioning { index: usize, message: String },
    /// Evaluation point lies on (or numerically on) a branch cut or contour.
    #[error("boundary error: {0}")]
    Boundary(String),
    /// Asymptotic formula queried outside its validity regime.
    #[error("out of asymptotic regime: {0}")]
    OutOfRegime(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Error {
        Error::InvalidArgument(msg.into())
    }
}
