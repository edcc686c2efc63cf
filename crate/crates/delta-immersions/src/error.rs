//! Library-wide error and diagnostic types.

use crate::complex::Diagnostics;
use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown {dim}-cell `{id}`")]
    UnknownCell { dim: usize, id: String },

    #[error("word contains cell letter `{0}` where only edge letters are allowed")]
    PLetterPresent(String),

    #[error("boundary label needs dimension >= 2, but `{id}` has dimension {dim}")]
    DimensionTooLow { id: String, dim: usize },

    #[error("vertex index {index} out of range for {dim}-cell `{id}`")]
    IndexOutOfRange {
        id: String,
        index: usize,
        dim: usize,
    },

    #[error("invalid complex:\n{0}")]
    InvalidComplex(Diagnostics),

    #[error("not an immersion:\n{0}")]
    NotAnImmersion(Diagnostics),

    #[error("no label-preserving cell map exists: {0}")]
    NoSuchMap(String),

    #[error("generator `{generator}` does not stabilize vertex `{vertex}`")]
    NotInLoopMonoid { generator: String, vertex: String },

    #[error("closure did not stabilize within {rounds} rounds")]
    ClosureBudgetExceeded { rounds: u32 },

    #[error("lift failed: {0}")]
    LiftFailure(String),

    #[error("ambiguous cell: {0}")]
    AmbiguousCell(String),

    #[error("complexes are labeled over different alphabets")]
    AlphabetMismatch,

    #[error("incompatible submonoid specs: {0}")]
    SpecMismatch(String),

    #[error("cell `{0}` has no label")]
    MissingLabel(String),

    #[error("malformed complex data: {0}")]
    Schema(String),

    #[error("not a base complex: {0}")]
    BaseShape(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short machine-readable tag, used as the CLI error prefix.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Syntax(_) => "E_SYNTAX",
            Error::UnknownLetter(_) => "E_UNKNOWN_LETTER",
            Error::UnknownVertex(_) => "E_UNKNOWN_VERTEX",
            Error::UnknownCell { .. } => "E_UNKNOWN_CELL",
            Error::PLetterPresent(_) => "E_P_LETTER",
            Error::DimensionTooLow { .. } => "E_DIMENSION",
            Error::IndexOutOfRange { .. } => "E_INDEX",
            Error::InvalidComplex(d) => d.first_tag().unwrap_or("E_INVALID_COMPLEX"),
            Error::NotAnImmersion(_) => "E_NOT_IMMERSION",
            Error::NoSuchMap(_) => "E_NO_SUCH_MAP",
            Error::NotInLoopMonoid { .. } => "E_NOT_IN_LOOP_MONOID",
            Error::ClosureBudgetExceeded { .. } => "E_BUDGET",
            Error::LiftFailure(_) => "E_LIFT",
            Error::AmbiguousCell(_) => "E_AMBIGUOUS_CELL",
            Error::AlphabetMismatch => "E_ALPHABET",
            Error::SpecMismatch(_) => "E_SPEC",
            Error::MissingLabel(_) => "E_MISSING_LABEL",
            Error::Schema(_) => "E_SCHEMA",
            Error::BaseShape(_) => "E_BASE_SHAPE",
            Error::Io(_) => "E_IO",
            Error::Json(_) => "E_JSON",
        }
    }
}
