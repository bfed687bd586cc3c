use thiserror::Error;

use crate::exactla::Field;
use crate::report::Report;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("{0} is not a prime below 2^61")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: String,
        expected: String,
        found: String,
    },

    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },

    #[error("parse error: {0}")]
    Parse(String),

    /// A structure failed one of its defining axioms; the report carries the witness.
    #[error("verification failed: {}", .0.summary())]
    Verification(Box<Report>),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn dimension(
        context: impl Into<String>,
        expected: impl ToString,
        found: impl ToString,
    ) -> Error {
        Error::Dimension {
            context: context.into(),
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn verification(report: Report) -> Error {
        Error::Verification(Box::new(report))
    }

    /// True for failures of mathematical verification, as opposed to malformed input.
    pub fn is_verification(&self) -> bool {
        matches!(self, Error::Verification(_) | Error::Singular { .. })
    }
}
