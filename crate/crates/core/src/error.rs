use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad arguments: out-of-range indices, non-bijective permutations,
    /// malformed certificates, invalid family parameters.
    #[error("usage error: {0}")]
    Usage(String),

    /// Text input that does not follow the matrix, graph or certificate
    /// format. Line and column are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// An operation was called outside its precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A brute-force routine was asked to work beyond its size limit.
    #[error("size guard exceeded: {0}")]
    Guard(String),

    /// A result that should be impossible. Always a bug.
    #[error("internal invariant failure: {0}")]
    Internal(String),
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

pub type Result<T> = std::result::Result<T, Error>;
