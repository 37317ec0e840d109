use thiserror::Error;

/// Errors raised across the arithmetic, group and module layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not a unit")]
    NotAUnit,
    #[error("resource limit `{cap}` exceeded (limit {limit})")]
    ResourceLimit { cap: &'static str, limit: u64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("action is not faithful: {0}")]
    NonFaithful(String),
    #[error("chain not verified")]
    UnverifiedChain,
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("not descendable: {0}")]
    NotDescendable(String),
    #[error("retry budget exhausted (seed {seed}): {what}")]
    BudgetExhausted { what: String, seed: u64 },
    #[error("closure failure: {0}")]
    Closure(String),
    #[error("coset enumeration did not complete within {0} cosets")]
    EnumerationIncomplete(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("missing presentation: run presentation_from_chain on the group first")]
    MissingPresentation,
}

pub type Result<T> = std::result::Result<T, Error>;
