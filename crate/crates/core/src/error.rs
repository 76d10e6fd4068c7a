use thiserror::Error;

use crate::word::Symbol;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,

    #[error("symbol {symbol} is out of range for alphabet size {q}")]
    SymbolOutOfRange { symbol: u32, q: u8 },

    #[error("alphabet size {0} is unsupported (expected 2..=36)")]
    BadAlphabet(u32),

    #[error("cannot parse word {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("duplication (i={index}, k={length}) does not fit a word of length {word_len}")]
    StepOutOfRange {
        index: usize,
        length: usize,
        word_len: usize,
    },

    #[error("word has fewer than three distinct symbols in its first four positions")]
    NoRegion,

    #[error("no prefix of the word is generated from the region {0}")]
    MalformedInput(String),

    #[error("words are over different alphabets ({0} vs {1})")]
    AlphabetMismatch(u8, u8),

    #[error("root-equality test is not a confusability criterion for {0}")]
    UnsupportedKind(&'static str),

    #[error("labels share a root but have {0} and {1} entries")]
    LabelMismatch(usize, usize),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("resource budget exceeded: {0}")]
    Resource(String),

    #[error("invalid duplication trace: {0}")]
    InvalidTrace(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_symbol(symbol: Symbol, q: u8) -> Result<()> {
    if symbol >= q {
        return Err(Error::SymbolOutOfRange {
            symbol: symbol as u32,
            q,
        });
    }
    Ok(())
}
