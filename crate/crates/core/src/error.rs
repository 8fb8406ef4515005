//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol '{0}': words are spelled over the alphabet {{N, E}}")]
    InvalidSymbol(char),

    #[error("index {index} out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("enumeration of paths with {requested} steps exceeds the bound {bound}")]
    EnumerationBound { requested: usize, bound: usize },

    #[error("ballot words require x <= y, got x = {x}, y = {y}")]
    BallotDomain { x: usize, y: usize },

    #[error("exponent tuple is empty after removing zero entries")]
    EmptyExponentTuple,

    #[error("closed form requires 1 <= a1 <= a2, got ({a1}, {a2}); swap the arguments")]
    UnorderedExponents { a1: u32, a2: u32 },

    #[error("base {0} is smaller than 2")]
    BaseTooSmall(u64),

    #[error("{0} is not a prime power greater than 1")]
    NotPrimePower(u64),

    #[error("prime {0} appears in more than one factor of the direct product")]
    DuplicatePrime(u64),

    #[error("group order {order} exceeds the oracle bound {bound}")]
    OracleBound { order: u64, bound: u64 },

    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { order: u64, p: u64 },

    #[error("not a ballot word: the prefix of length {index} has more E than N steps")]
    NotBallotWord { index: usize },

    #[error("word ends at ({found_x}, {found_y}), expected ({expected_x}, {expected_y}) for the requested target and arch count")]
    BallotEndpointMismatch {
        expected_x: usize,
        expected_y: usize,
        found_x: usize,
        found_y: usize,
    },

    #[error("arch count {k} is infeasible for a path ending at ({x}, {y})")]
    InfeasibleArchCount { k: usize, x: usize, y: usize },
}
