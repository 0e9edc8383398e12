use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no value assigned to generator `{0}`")]
    IncompleteAssignment(String),
    #[error("polynomial is not symmetric in (lb, rb) and (l, r): {0}")]
    NotCollectable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("non-integral result: {0}")]
    NonIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
