use thiserror::Error;

use crate::exactalg::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),

    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange { what: &'static str, value: usize, allowed: String },

    #[error("matrix is singular")]
    Singular,

    #[error("{0} is not a prime below 65536")]
    InvalidModulus(u64),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("resource budget exceeded: {needed} elements requested, budget is {budget}")]
    Budget { needed: String, budget: u64 },

    #[error("operation requires a finite field, got {0}")]
    InfiniteField(Field),

    #[error("zero polynomial has no well-defined root set")]
    ZeroPolynomial,

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn shape(expected: impl ToString, found: impl ToString) -> Self {
        Error::ShapeMismatch { expected: expected.to_string(), found: found.to_string() }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
