use thiserror::Error;

/// Errors produced by the sequence calculus and the invariants built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("empty sequence: at least one part is required")]
    Empty,

    #[error("part {index} has length 0; lengths must be at least 1")]
    ZeroLength { index: usize },

    #[error("regular parts {first} and {second} are cyclically adjacent")]
    AdjacentRegular { first: usize, second: usize },

    #[error("inadmissible a-word at position {position}: {message}")]
    Inadmissible { position: usize, message: String },

    #[error("operation requires at least one singular part")]
    NoSingularParts,

    #[error("operation requires at least one regular part")]
    NoRegularParts,

    #[error("operation requires an intermediate word, got {class}")]
    NotIntermediate { class: String },

    #[error("{count} variables exceed the supported maximum of {max}")]
    TooManyVariables { count: usize, max: usize },

    #[error("index {index} is outside Z/{modulus}Z")]
    OutOfRange { index: usize, modulus: usize },

    #[error("expected {expected} values, got {actual}")]
    Arity { expected: usize, actual: usize },

    #[error("subset {subset} is not allowed relative to the mark set")]
    NotAllowed { subset: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
