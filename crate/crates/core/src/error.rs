use thiserror::Error;

/// Errors raised by the partition, poset and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid beta-set {0:?}: elements must be positive and strictly decreasing")]
    InvalidBetaSet(Vec<u32>),

    #[error("invalid generator tuple {generators:?}: {reason}")]
    InvalidTuple { generators: Vec<u32>, reason: String },

    #[error("{0:?} is not an order ideal of the poset")]
    NotAnIdeal(Vec<u32>),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("poset has {elements} elements; the subset scan is limited to {limit}")]
    TooLarge { elements: usize, limit: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
