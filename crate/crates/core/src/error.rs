use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("objects belong to different ring contexts")]
    ContextMismatch,

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("ideal is not m-primary: {0}")]
    NotMPrimary(String),

    #[error("stabilization bound exceeded: {what} did not stabilize within {bound} steps")]
    StabilizationExceeded { what: String, bound: usize },

    #[error("reduction search failed after {attempts} attempts; last attempt: {last}")]
    ReductionSearchFailed { attempts: usize, last: String },

    #[error("not a member: {0}")]
    NotContained(String),

    #[error("non-integral result: {0}")]
    NonIntegral(String),

    #[error("inconsistent data: {0}")]
    Inconsistency(String),

    #[error("{0} requires a Cohen-Macaulay ring (use force to override)")]
    RequiresCohenMacaulay(String),
}

impl Error {
    /// Process exit code used by the command line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotMPrimary(_) => 3,
            Error::StabilizationExceeded { .. } => 4,
            Error::ReductionSearchFailed { .. } => 5,
            _ => 2,
        }
    }
}
