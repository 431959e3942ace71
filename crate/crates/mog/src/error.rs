//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MogError {
    /// Two vectors (or a vector and a game) disagree on the number of
    /// objectives.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation that needs (strictly) positive components received a
    /// zero or negative one, e.g. a frontier vector used as a denominator.
    #[error("positive-domain violation: {0}")]
    PositiveDomain(String),

    /// A game representation violates its structural invariants (wrong table
    /// size, missing symmetric entry, unsorted scope, ...).
    #[error("malformed game: {0}")]
    MalformedGame(String),

    /// A potential annotation does not satisfy the exact-potential identity.
    #[error("invalid potential: {0}")]
    PotentialInvalid(String),
}

pub type Result<T> = std::result::Result<T, MogError>;
