use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which condition made a tower fail the Z-triviality test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NotZTrivialReason {
    /// `h_j` has an odd coefficient, so `h_j / 2` is not integral.
    OddCoefficient,
    /// `h_j` involves more than one `z_k`, so `h_j^2 != 0`.
    MultipleZTerms,
}

impl fmt::Display for NotZTrivialReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotZTrivialReason::OddCoefficient => "odd-coefficient",
            NotZTrivialReason::MultipleZTerms => "multiple-z-terms",
        })
    }
}

/// A tower is not Z-trivial; `index` is the first failing stage (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NotZTrivial {
    pub index: usize,
    pub reason: NotZTrivialReason,
}

impl fmt::Display for NotZTrivial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not-z-trivial j={} reason={}",
            self.index + 1,
            self.reason
        )
    }
}

/// Position of a syntax error in a text input, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator index {index} out of range for a presentation on {n} generators")]
    PresentationMismatch { index: usize, n: usize },

    #[error("dimension {n} exceeds the supported maximum of {max}")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("{0}")]
    NotZTrivial(NotZTrivial),

    #[error("label at stage {index} does not fit in 64 bits")]
    LabelOverflow { index: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram is not a single rooted tree")]
    NotConnected,

    #[error("cannot build a deck of the empty forest")]
    EmptyForest,

    #[error("invalid deck: {0}")]
    InvalidDeck(String),

    #[error("parse error at {0}")]
    Parse(ParseError),
}

impl From<NotZTrivial> for Error {
    fn from(e: NotZTrivial) -> Self {
        Error::NotZTrivial(e)
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
