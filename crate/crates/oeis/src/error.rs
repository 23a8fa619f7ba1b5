use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OeisError {
    #[error("b-file line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("`{0}` is not a sequence id of the form A000000")]
    InvalidId(String),

    #[error("no terms offered")]
    NoTerms,

    #[error("{id} is unavailable: {reason}")]
    Unavailable { id: String, reason: String },

    #[error("cache: {0}")]
    Cache(String),
}

impl OeisError {
    /// True when the sequence could not be obtained at all, as opposed to
    /// bad input.
    pub fn is_unavailable(&self) -> bool {
        matches!(self, OeisError::Unavailable { .. })
    }
}

pub type Result<T> = std::result::Result<T, OeisError>;
