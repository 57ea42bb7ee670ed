use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Internal` marks a broken invariant of the implementation itself; it is
/// never the consequence of bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand count {0} is not supported (need n >= 3)")]
    StrandCount(usize),

    #[error("mismatched strand counts: {left} vs {right}")]
    MismatchedStrands { left: usize, right: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("cannot parse braid word: {0}")]
    ParseWord(String),

    #[error("cannot parse group spec: {0}")]
    ParseSpec(String),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("group order {order} exceeds the enumeration bound {bound}")]
    OrderBoundExceeded { order: u64, bound: u64 },

    #[error("conjugation does not preserve the lattice: {0}")]
    LatticeNotPreserved(String),

    #[error("the trivial coset carries no torsion question")]
    TrivialCoset,

    #[error("strand budget exceeded: blocks need {needed} strands, only {available} available")]
    StrandBudget { needed: usize, available: usize },

    #[error("not decided for this input: {0}")]
    OutOfScope(String),

    #[error("{0}")]
    Usage(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
