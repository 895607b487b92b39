use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The longest infix of the queried word does not occur, so its
    /// deviation is not defined.
    #[error("deviation undefined: longest infix of {0:?} does not occur")]
    DevUndefined(String),

    #[error("search space of {size} sequences exceeds the limit of {limit}")]
    TooLarge { size: u128, limit: u128 },

    #[error("cannot place {count} non-overlapping copies of a length-{len} word in a sequence of length {n}")]
    PlacementFailed { count: usize, len: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
