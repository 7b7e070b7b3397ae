use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is absent or out of range")]
    InvalidVertex(usize),
    #[error("graph has no present vertices")]
    EmptyGraph,
    #[error("invalid elimination ordering: {0}")]
    InvalidOrdering(String),
    #[error("graph is not {0}")]
    ClassViolation(&'static str),
    #[error("{what} is {size}, above the limit of {limit}")]
    SizeLimit { what: &'static str, size: usize, limit: usize },
    #[error("invalid interval for vertex {label}: {reason}")]
    InvalidInterval { label: usize, reason: String },
    #[error("bound violated: {0}")]
    BoundViolation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
