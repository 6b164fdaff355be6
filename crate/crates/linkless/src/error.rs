use thiserror::Error;

/// Errors reported by graph operations, parsers, and the search drivers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input violates a structural requirement of the operation,
    /// e.g. an unknown vertex, a missing edge, or a non-simple graph
    /// where a simple one is required.
    #[error("{0}")]
    Input(String),

    /// The graph is larger than the configured search cap.
    #[error("graph has {size} vertices, exceeding the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    /// Malformed textual input. `offset` is a byte position into the
    /// original text.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}
