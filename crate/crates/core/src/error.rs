use thiserror::Error;

use crate::profile::Unit;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unit mismatch: {left} vs {right}")]
    UnitMismatch { left: Unit, right: Unit },
    #[error("reference sets differ: {0}")]
    ReferenceMismatch(String),
    #[error("invalid value {value} for '{name}' (must be finite and non-negative)")]
    InvalidValue { name: String, value: f64 },
    #[error("unsupported conversion from {from} to {to}")]
    UnsupportedConversion { from: Unit, to: Unit },
    #[error("invalid conversion rate {0} (must be finite and positive)")]
    InvalidRate(f64),
    #[error("unknown metric '{0}' (expected l1, l2, linf or l<n> with n >= 1)")]
    InvalidMetric(String),
    #[error("empty name")]
    EmptyName,
    #[error("profile has no entries")]
    EmptyProfile,
    #[error("duplicate reference '{0}'")]
    DuplicateReference(String),
    #[error("{}", parse_message(*.line, *.column, .message))]
    ParseError {
        line: usize,
        column: Option<usize>,
        message: String,
    },
    #[error("duplicate candidate '{0}'")]
    DuplicateCandidate(String),
    #[error("empty input")]
    EmptyInput,
    #[error("reference '{0}' not found")]
    ReferenceNotFound(String),
    #[error("empty reference selection")]
    EmptySelection,
    #[error("target profile has zero magnitude")]
    DegenerateTarget,
    #[error("at least two candidates are required, found {0}")]
    InsufficientCandidates(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("no distance table in {0}")]
    MissingTable(Unit),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_message(line: usize, column: Option<usize>, message: &str) -> String {
    match column {
        Some(col) => format!("parse error at line {line}, column {col}: {message}"),
        None => format!("parse error at line {line}: {message}"),
    }
}
