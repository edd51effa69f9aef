use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("Y({n}, {k}) is outside the Lucas triangle (need 0 <= k <= n)")]
    TriangleIndex { n: u64, k: i64 },

    #[error("{what} index {n} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("graph has no subcopy named {0:?}")]
    UnknownSubcopy(String),

    #[error("subcopy {name:?} does not induce the expected graph: {reason}")]
    SubcopyMismatch { name: String, reason: String },

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    #[error("b-file line {line}: {reason}")]
    BFileSyntax { line: usize, reason: String },

    #[error("b-file index gap: expected {expected}, found {found} (line {line})")]
    BFileGap { line: usize, expected: i64, found: i64 },

    #[error("b-file contains no data lines")]
    BFileEmpty,

    #[error("invalid OEIS id {0:?} (expected A followed by six digits)")]
    BadSequenceId(String),

    #[error("offline mode and no cached b-file for {0}")]
    Offline(String),

    #[error("fetching {url}: {reason}")]
    Network { url: String, reason: String },

    #[error("compared sequences do not overlap at shift {0}")]
    EmptyOverlap(i64),

    #[error("malformed factor: {0}")]
    FactorFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
