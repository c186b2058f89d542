use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YdError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("empty hom: {0}")]
    EmptyHom(String),
    #[error("closure exceeded the cap of {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("integrity error in {path}: {identity} does not hold")]
    IntegrityError { path: String, identity: String },
    #[error("unknown command: {0}")]
    UnknownCommand(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, YdError>;
