use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An alphabet spec document could not be parsed or violates an invariant.
    #[error("alphabet spec line {line}: {message}")]
    AlphabetSpec { line: usize, message: String },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown builtin alphabet `{0}`")]
    UnknownAlphabet(String),

    #[error("alphabet mismatch: `{left}` vs `{right}`")]
    AlphabetMismatch { left: String, right: String },

    #[error("symbol inventory size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid substitution key: {0}")]
    InvalidKey(String),

    /// A ciphertext character is not part of the expected symbol inventory.
    #[error("cryptogram position {position}: symbol {symbol:?} is not in the cipher symbol set")]
    UnknownSymbol { position: usize, symbol: char },

    #[error("sample size {size} exceeds corpus length {length}")]
    SizeExceedsCorpus { size: usize, length: usize },

    #[error("degenerate chain: state {0} has no outgoing transitions")]
    DegenerateChain(String),

    #[error("row for {0:?} cannot be normalized (zero total)")]
    NonNormalizableRow(String),

    #[error("need at least 2 points with count >= {min_count}, found {found}")]
    TooFewPoints { min_count: u64, found: usize },

    #[error("model file: {0}")]
    ModelFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
