//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by dataset ingestion, configuration checks, and the solver.
#[derive(Debug, Error)]
pub enum Error {
    /// Two operands that must agree in shape do not.
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    /// An input collection that must be non-empty is empty.
    #[error("{0} must not be empty")]
    Empty(&'static str),

    /// A hyperparameter or spec field is outside its valid range.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A CSV cell or row failed validation; locations are 1-based and count
    /// the header row.
    #[error("{path}: row {row}, column {column}: {message}")]
    Csv {
        path: String,
        row: usize,
        column: String,
        message: String,
    },

    /// The named label column is absent from the CSV header.
    #[error("{path}: label column {name:?} not found in header")]
    MissingLabelColumn { path: String, name: String },

    /// A dense factorization or eigensolver could not complete.
    #[error("numerical failure: {0}")]
    Numeric(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
