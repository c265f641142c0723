//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MblError {
    #[error("empty corpus: no instance tokens to store")]
    EmptyCorpus,

    #[error("ragged features: token {index} has {got} features, expected {expected}")]
    RaggedFeatures {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("window width must be odd and >= 1, got {0}")]
    EvenWidth(usize),

    #[error("feature-vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("empty instance base")]
    EmptyBase,

    #[error("typicality undefined: base holds a single class")]
    SingleClass,

    #[error("information gain for feature {feature} is {gain}, below the numerical floor")]
    NegativeGain { feature: usize, gain: f64 },

    #[error("direction `{direction}` is not valid for criterion `{criterion}`")]
    DirectionMismatch {
        criterion: &'static str,
        direction: &'static str,
    },

    #[error("scores cover {got} types but base holds {expected}")]
    ScoreCoverage { expected: usize, got: usize },

    #[error("{context}: score criterion is `{got}`, expected `{expected}`")]
    CriterionMismatch {
        context: &'static str,
        expected: &'static str,
        got: &'static str,
    },

    #[error("percent must lie in [0, 100], got {0}")]
    PercentOutOfRange(f64),

    #[error("corpus split needs at least 2 words, got {0}")]
    TooFewWords(usize),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, MblError>;
