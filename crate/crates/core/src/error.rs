use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("hopf mismatch: {0}")]
    HopfMismatch(String),

    #[error("module mismatch: {0}")]
    ModuleMismatch(String),

    #[error("invalid group table: {axiom} fails ({detail})")]
    InvalidGroup { axiom: String, detail: String },

    #[error("x-products require finite-dimensional H")]
    InfiniteDimensional,

    #[error("malformed mu descriptor: {0}")]
    MalformedMu(String),

    #[error("position {position} out of range for a tensor with {len} places")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("invalid input bialgebra: {0}")]
    InvalidBialgebra(String),

    #[error("line {line}, column {column}: expected {expected}, found {found}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
        found: String,
    },

    #[error("line {line}: {message}")]
    Semantic { line: usize, message: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("missing data: {0}")]
    Missing(String),
}

pub type Result<T> = std::result::Result<T, Error>;
