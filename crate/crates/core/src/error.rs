use std::fmt;

use thiserror::Error;

/// Position-tagged syntax error from the polynomial or problem-file parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },

    #[error("invalid term order: {0}")]
    InvalidOrder(String),

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("constant polynomial where a nonconstant one is required")]
    ConstantPolynomial,

    #[error("ideal is the unit ideal")]
    UnitIdeal,

    #[error("element already lies in the ideal")]
    ElementInIdeal,

    #[error("division is not exact")]
    InexactDivision,

    #[error("monomial ideal must be squarefree")]
    NotSquarefree,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("term order hypothesis violated: {0}")]
    OrderHypothesis(String),

    #[error("cyclic order constraints involving {0}")]
    CyclicConstraints(String),

    #[error("merge rejected ({rule}): {detail}")]
    MergeRejected { rule: String, detail: String },

    #[error(
        "ring too large for the depth oracle: {vars} variables after polarization (limit {limit}); pass --force to override"
    )]
    SizeGuard { vars: usize, limit: usize },

    #[error("invalid form: {0}")]
    InvalidForm(String),

    #[error("internal consistency check failed: {0}")]
    Defect(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
