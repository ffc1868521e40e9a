use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not invertible over the Laurent ring")]
    NotInvertible,
    #[error("vertex {vertex} out of range for n = {n}")]
    Vertex { vertex: usize, n: usize },
    #[error("mismatched number of vertices: {0} vs {1}")]
    Rank(usize, usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("chain map does not match its source or target")]
    MapMismatch,
    #[error("object could not be identified with a shifted stable: {0}")]
    Identify(String),
    #[error("iteration cap of {0} exceeded")]
    IterationCap(usize),
    #[error("invalid charge parameters: {0}")]
    Charge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
