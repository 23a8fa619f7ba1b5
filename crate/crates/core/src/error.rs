use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient of t^{index} requested, but the series is only known below t^{order}")]
    TruncationExceeded { index: usize, order: usize },

    #[error("truncation order must be at least 1")]
    EmptySeries,

    #[error("series constant term is not invertible")]
    SingularSeries,

    #[error("inner series of a composition must have zero constant term")]
    CompositionOrder,

    #[error("reversion needs h(0) = 0 and an invertible coefficient of t")]
    ReversionDomain,

    #[error("p(0) = 0: the array would not be a proper Riordan array")]
    ImproperArray,

    #[error("the zero polynomial has no Riordan array")]
    ZeroPolynomial,

    #[error("array has {rows} rows, {needed} are required")]
    InsufficientRows { rows: usize, needed: usize },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("{0}")]
    Domain(String),

    #[error("{claim} violated: {detail}")]
    Violation { claim: String, detail: String },
}

impl Error {
    pub(crate) fn violation(claim: &str, detail: impl Into<String>) -> Self {
        Error::Violation {
            claim: claim.to_string(),
            detail: detail.into(),
        }
    }

    /// True for failures of a verified mathematical claim, as opposed to bad
    /// input or domain errors.
    pub fn is_violation(&self) -> bool {
        matches!(self, Error::Violation { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
