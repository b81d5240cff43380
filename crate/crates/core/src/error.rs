use thiserror::Error;

use crate::grid::{Cell, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid tableau: {0}")]
    Invalid(Violation),

    #[error("enumeration exceeded the limit of {limit} items")]
    LimitExceeded { limit: usize },

    #[error("size parameter must be at least {min}, got {got}")]
    SizeTooSmall { min: usize, got: usize },

    #[error("root walk hypotheses fail at column {col}: {reason}")]
    RootHypothesis { col: usize, reason: String },

    #[error("insertion at {target} has no admissible row")]
    NoInsertionRow { target: Cell },

    #[error("insertion at {target} lands on occupied row {row}")]
    RowOccupied { target: Cell, row: usize },

    #[error("labels do not match the free points of the tableau: {0}")]
    LabelDomain(String),

    #[error("configuration is not symmetric")]
    NotSymmetric,

    #[error("point set is not a proper subset of the maximal points")]
    NotProperSubset,

    #[error("label function is outside its admissible set: {0}")]
    BadLabelFunction(String),

    #[error("arithmetic integrity failure: {0}")]
    Integrity(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
