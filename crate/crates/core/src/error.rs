//! Error type shared by every module of the crate.

use thiserror::Error;

/// All failure modes surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The element does not belong to the stated family's group.
    #[error("element not in family {family}: {reason}")]
    ElemNotInFamily { family: String, reason: String },
    /// The element is not a (twisted) involution.
    #[error("not a (twisted) involution: {0}")]
    NotInvolution(String),
    /// The element is not an atom of the relevant longest element.
    #[error("not an atom: {0}")]
    NotAnAtom(String),
    /// A one-line representation was required to be all-positive.
    #[error("one-line values must all be positive: {0}")]
    NotUnsigned(String),
    /// A strict partition was required.
    #[error("partition is not strict: {0}")]
    NotStrict(String),
    /// An expansion mixed terms of different degrees.
    #[error("expansion mixes terms of different degrees")]
    MixedDegree,
    /// A vector was not in the span of the requested basis.
    #[error("not in the span of the requested basis: {0}")]
    NotInSpan(String),
    /// An invalid rank was supplied.
    #[error("bad rank: {0}")]
    BadRank(String),
    /// An invalid index was supplied.
    #[error("bad index: {0}")]
    BadIndex(String),
    /// The ambient rank is too small for the requested reflection.
    #[error("ambient rank too small: {0}")]
    RankTooSmall(String),
    /// A matching violated its structural invariants.
    #[error("malformed matching: {0}")]
    MalformedMatching(String),
    /// A configured step or memory budget was exceeded.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    /// A telescoping-sum hypothesis failed at the named vertex.
    #[error("telescoping hypothesis failed at vertex {0}")]
    HypothesisFailed(String),
    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    ParseError(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
