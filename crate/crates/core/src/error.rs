use thiserror::Error;

/// Errors raised by topology queries, constructions and guarded searches.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {label} is out of range for dimension {n}")]
    InvalidVertex { label: u32, n: u32 },

    #[error("a vertex pair must consist of two distinct vertices")]
    InvalidPair,

    #[error("cannot parse vertex {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("unknown topology kind {0:?} (expected q, fq or aq)")]
    UnknownKind(String),

    #[error("{what} out of range: {detail}")]
    Range { what: &'static str, detail: String },

    #[error("search guard: {0}")]
    Guard(String),

    #[error("unknown lemma suite {0:?}")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Range {
            what,
            detail: detail.into(),
        }
    }

    /// Whether the error stems from a parameter/range guard rather than malformed input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Range { .. } | Error::Guard(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
