use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not lonesum")]
    NotLonesum,
    #[error("matrix contains a gamma configuration")]
    NotGammaFree,
    #[error("permutation is not a Callan permutation")]
    NotCallan,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed {what}: {reason}")]
    Malformed { what: &'static str, reason: String },
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn malformed(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Malformed { what, reason: reason.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
