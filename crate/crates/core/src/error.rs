use thiserror::Error;

use crate::wes::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot compose: codomain {codomain} of the inner map differs from domain {domain} of the outer map")]
    IncompatibleComposition { codomain: String, domain: String },

    #[error("matrix is not a well-defined homomorphism: {0}")]
    NotWellDefined(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid invariant factors: {0}")]
    InvalidGroup(String),

    #[error("not a short exact sequence: {0}")]
    NotExact(String),

    #[error("extension classes live in different Ext groups")]
    ResolutionMismatch,

    #[error("oracle refused: group of order {order} exceeds the limit {limit}")]
    OracleTooLarge { order: String, limit: u64 },

    #[error("degree {degree} is outside the range {lo}..={hi}")]
    DegreeOutOfRange { degree: usize, lo: usize, hi: usize },

    #[error("invalid Γ-system:\n{0}")]
    InvalidSystem(ValidationReport),

    #[error("malformed input: {0}")]
    Malformed(String),

    /// A computed identity that must hold by theory failed. Signals a bug or
    /// an inconsistent input that slipped past validation.
    #[error("integrity failure: {0}")]
    Integrity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
