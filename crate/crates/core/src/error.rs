use thiserror::Error;

use crate::word::Word;

/// Errors raised by the library. Annihilation (the zero result of an
/// operator) is a value, never an error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("column index must be at least 1, got {0}")]
    InvalidIndex(usize),

    #[error("bad partition {text:?}: {reason}")]
    PartitionParse { text: String, reason: String },

    #[error("bad token {token:?} at position {position}: {reason}")]
    WordParse {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("normal form parameters too small: need m >= {min_m} and n >= {min_n}, got m = {m}, n = {n}")]
    Params {
        m: u32,
        n: u32,
        min_m: u32,
        min_n: u32,
    },

    #[error("letter {letter} at position {position} does not use index {t}")]
    ForeignLetter {
        position: usize,
        letter: String,
        t: u32,
    },

    #[error("subalgebra index must be at least {min}, got {t}")]
    SubalgebraIndex { t: u32, min: u32 },

    #[error(transparent)]
    Trace(#[from] TraceError),
}

/// Failure while replaying or checking a rewrite certificate. `step` is the
/// 0-based index of the first offending step.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("step {step}: side condition violated for {rule}: {reason}")]
    SideCondition {
        step: usize,
        rule: String,
        reason: String,
    },

    #[error("step {step}: expected {expected:?} at position {position} of {word:?}")]
    Mismatch {
        step: usize,
        position: usize,
        expected: String,
        word: String,
    },

    #[error("replay ends at {actual:?} but the certificate claims {claimed:?}")]
    EndMismatch { claimed: String, actual: String },

    #[error("start {start:?} and end {end:?} have different fingerprints")]
    Fingerprint { start: String, end: String },

    #[error("malformed certificate: {0}")]
    Format(String),
}

impl TraceError {
    pub(crate) fn mismatch(step: usize, position: usize, expected: &Word, word: &Word) -> Self {
        TraceError::Mismatch {
            step,
            position,
            expected: expected.to_string(),
            word: word.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
