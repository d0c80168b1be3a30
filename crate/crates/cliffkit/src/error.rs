//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong in cliffkit.
///
/// [`Error::Consistency`] is special: it signals that two independent
/// computations of the same fact disagree, i.e. an internal bug or a broken
/// convention, rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(String, String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("odd dimension n = {0}: operation needs an even number of generators")]
    OddDimension(usize),
    #[error("even dimension n = {0}: operation needs an odd number of generators")]
    EvenDimension(usize),
    #[error("size guard exceeded: n = {n} > {max} (set CLIFFKIT_MAX_DIM to override)")]
    SizeGuard { n: usize, max: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotent is not primitive: dim fClf = {found}, expected {expected}")]
    NotPrimitive { found: usize, expected: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for internal-consistency failures (CLI exit code 3).
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
