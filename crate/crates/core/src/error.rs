use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty period list")]
    EmptyPeriodList,

    #[error("expected a positive integer, got {0}")]
    NotPositive(String),

    #[error("subset enumeration limit: {k} periods exceeds the maximum of {max}")]
    SubsetLimit { k: usize, max: usize },

    #[error("inexact division: {0}")]
    InexactDivision(&'static str),

    #[error("polynomial is not monic of degree at least one")]
    NotMonic,

    #[error("table too large: {rows} rows exceeds the cap of {cap}")]
    TableTooLarge { rows: String, cap: usize },

    #[error("length mismatch: expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("values come from different group realizations")]
    MixedGroups,

    #[error("empty residue system")]
    EmptySystem,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid coefficient table document: {0}")]
    InvalidTable(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
