use thiserror::Error;

use crate::unstable::ValidationReport;

/// Crate-wide error type.  Domain violations carry enough context to print a
/// one-line diagnosis; parse errors carry a position.
#[derive(Debug, Error)]
pub enum Error {
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: u8, right: u8 },

    #[error("level {0} out of range (supported levels are 0..=3)")]
    LevelOutOfRange(u8),

    #[error("division by zero")]
    DivisionByZero,

    #[error("both coordinates are zero; no projective point is defined")]
    BothCoordinatesZero,

    #[error("matrix is not a projector")]
    NotAProjector,

    #[error("matrix is not a point of the projective plane: {0}")]
    NotAProjectivePoint(String),

    #[error("octonion-level rank-1 projectors are outside the supported construction")]
    VectorProjectorLevelTooHigh,

    #[error("algebra fails validation:\n{0}")]
    InvalidAlgebra(ValidationReport),

    #[error("algebra is not a double candidate: {0}")]
    NotADoubleCandidate(String),

    #[error("algebra has no fundamental class")]
    MissingFundamental,

    #[error("cup pairing is not a perfect pairing: {0}")]
    NotPoincareDuality(String),

    #[error("relator is not a literal square: {0}")]
    NotAllRelatorsSquare(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
