use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context mismatch: {0}")]
    Context(String),

    #[error("zero input to {0}")]
    ZeroInput(&'static str),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("{modulus} is not prime")]
    NotPrime { modulus: u64 },

    /// Malformed command line.
    #[error("usage: {0}")]
    Usage(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
