use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be at least 1, got 0")]
    Zero { what: &'static str },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid symbol {0:?}: words use A/B (or 0/1)")]
    InvalidSymbol(char),

    #[error("word length {0} exceeds the supported maximum of {max}", max = crate::words::MAX_LEN)]
    TooLong(usize),

    #[error("deletion sphere of the empty word is undefined")]
    EmptyWord,

    #[error("word set mixes lengths {0} and {1}")]
    MixedLengths(usize, usize),

    #[error("{d} does not divide {n}")]
    NotADivisor { d: u64, n: u64 },

    #[error("invalid code parameters: {0}")]
    InvalidCodeSpec(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// An exact division left a remainder. This never happens on valid
    /// input; it means an arithmetic fault somewhere upstream.
    #[error("inexact division in {0}")]
    InexactDivision(&'static str),

    /// Two distinct codewords explain the same received word.
    #[error("uniqueness violated: {received} decodes to both {first} and {second}")]
    UniquenessViolation {
        received: String,
        first: String,
        second: String,
    },
}
