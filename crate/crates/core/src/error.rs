use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("closure exceeded the cap of {cap} elements")]
    Overflow { cap: usize },
    #[error("type {0} is not split")]
    NotSplit(String),
    #[error("group contains the odd permutation {0}; intersect with A_n first")]
    OddElement(String),
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
    #[error("unknown named group {0}")]
    UnknownGroup(String),
    #[error("named group {name}: closure order {got} does not match expected order {expected}")]
    OrderMismatch { name: String, expected: usize, got: usize },
    #[error("catalog error: {0}")]
    Catalog(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
