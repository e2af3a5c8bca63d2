use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("roster of {size} vertices exceeds the ambient enumeration cap of {cap}")]
    RosterTooLarge { size: usize, cap: usize },

    #[error("hyperedge dimension {dim} exceeds the tracked cap of {cap}")]
    DimensionOverCap { dim: usize, cap: usize },

    #[error("invalid hyperedge: {0}")]
    InvalidHyperedge(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid grade: {0}")]
    InvalidGrade(String),

    #[error("grade window is reversed: t must not exceed r")]
    ReversedWindow,

    #[error("bar endpoint {0} is not a critical grade")]
    NotCriticalGrade(String),

    #[error("rank table is not realizable by any barcode: {0}")]
    NonRealizable(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
