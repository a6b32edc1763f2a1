use thiserror::Error;

/// Errors raised by graph construction and the operations built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed ribbon graph: {0}")]
    Malformed(String),

    #[error("duality implemented for orientable maps only")]
    NonOrientableDual,

    #[error("operation requires an orientable map: {0}")]
    NonOrientable(&'static str),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {vertex} is uncolored")]
    Uncolored { vertex: usize },

    #[error("vertex {vertex} has valence {valence}, need at least 3 for truncation")]
    ValenceTooSmall { vertex: usize, valence: usize },

    #[error("invalid pattern type ({k}, {l}, {n}): {reason}")]
    InvalidType {
        k: usize,
        l: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("unknown catalog entry: {0}")]
    UnknownCatalog(String),

    #[error("invalid surgery: {0}")]
    Surgery(String),

    #[error("invalid voltage assignment: {0}")]
    Voltage(String),

    #[error("invalid monodromy encoding: {0}")]
    Monodromy(String),

    #[error("size cap exceeded: {what} is {size}, cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("no free orientation-reversing involution found")]
    NoInvolution,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
