use thiserror::Error;

use crate::graph::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(Violation),
    #[error("invalid nice decomposition: {0}")]
    InvalidNice(String),
    #[error("invalid cut order: {0}")]
    InvalidCutOrder(String),
    #[error("resource guard tripped: {0}")]
    ResourceGuard(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("partition {0} is crossing on the given order")]
    CrossingPartition(String),
    #[error("non-crossing rows do not form a basis for n = {0}")]
    BasisFailure(usize),
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("degenerate gadget at point: {0}")]
    DegenerateGadget(String),
    #[error("point ({x}, {y}) is not applicable: {reason}")]
    InapplicablePoint { x: String, y: String, reason: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
