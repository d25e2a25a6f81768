use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid universe: {0}")]
    InvalidUniverse(String),

    #[error("universe has {size} elements, limit is {limit}")]
    UniverseTooLarge { size: usize, limit: usize },

    #[error("operands live over different universes")]
    UniverseMismatch,

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("multirelation is not a subidentity")]
    NotSubidentity,

    #[error("fixpoint iteration did not stabilize within {steps} steps")]
    NoStabilization { steps: usize },

    #[error("unbound variable `{0}`")]
    Unbound(String),

    #[error("operation `{0}` is not available in this algebra")]
    Unsupported(&'static str),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("exhaustive enumeration over {size} elements exceeds limit {limit}")]
    ExhaustiveTooLarge { size: usize, limit: usize },

    #[error("{0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
