use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("invalid radicand polynomial: {0}")]
    InvalidRadicand(String),
    #[error("radicand mismatch: sqrt({0}) and sqrt({1}) cannot be combined")]
    RadicandMismatch(String, String),
    #[error("index {index} out of range (only {available} terms computed)")]
    OutOfRange { index: usize, available: usize },
    #[error("no period found within {0} steps")]
    NoPeriod(usize),
    #[error("({p}, {q}) is not a solution of a Pell equation with D = {d}")]
    NotASolution { p: String, q: String, d: String },
    #[error("search box too large: {candidates} candidates exceeds cap {cap}")]
    BoxTooLarge { candidates: u128, cap: u128 },
    #[error("unsupported ring: {0}")]
    RingUnsupported(&'static str),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
