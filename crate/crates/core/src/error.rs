use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word has no {0}")]
    EmptyWord(&'static str),

    #[error("symbol {symbol} is out of range for alphabet size {k}")]
    SymbolOutOfRange { symbol: u32, k: u32 },

    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(u32),

    #[error("{op} requires n >= {min}, got {got}")]
    OrderTooSmall {
        op: &'static str,
        min: u32,
        got: u32,
    },

    #[error("rotation offset {offset} exceeds word length {len}")]
    RotationOutOfRange { offset: usize, len: usize },

    #[error("{what} would enumerate {size} words, above the practical ceiling of {ceiling}")]
    CeilingExceeded {
        what: &'static str,
        size: u128,
        ceiling: u64,
    },

    #[error("{0} is outside the domain of Euler's phi (d >= 1 required)")]
    PhiOutOfDomain(u64),

    #[error("word {0} is not primitive")]
    NotPrimitive(String),

    #[error("factor order {order} exceeds sequence length {len}")]
    OrderExceedsLength { order: usize, len: usize },

    #[error("dictionary words must all have length {expected}, found one of length {found}")]
    DictionaryLengthMismatch { expected: usize, found: usize },

    #[error("target words must share one length, found both {0} and {1}")]
    MixedTargetLengths(usize, usize),

    #[error("target length {target_len} exceeds word length {word_len}")]
    TargetTooLong {
        target_len: usize,
        word_len: usize,
    },

    #[error("no target words given")]
    EmptyTargets,

    #[error("fractional power of length {requested} is shorter than the base word ({base})")]
    PowerBelowOne { requested: usize, base: usize },

    #[error("invalid seed: {0}")]
    InvalidSeed(String),

    #[error("step budget of {0} exhausted; this signals a defect, not a valid outcome")]
    StepBudgetExhausted(u64),

    #[error("malformed trace: {0}")]
    MalformedTrace(String),

    #[error("search inconclusive: budget of {budget} states exhausted after exploring {explored}")]
    Inconclusive { explored: u64, budget: u64 },

    #[error("word does not cover all squares: {missing} of {total} square roots missing")]
    SquaresNotCovered { missing: usize, total: usize },

    #[error("cannot parse word: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
