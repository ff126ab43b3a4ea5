use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at L = {0}")]
    PoleAtPoint(String),
    #[error("series is not invertible: constant term vanishes")]
    NotInvertible,
    #[error("series truncated at order {order} cannot act on a polynomial of degree {degree}")]
    TruncationTooShort { order: usize, degree: usize },
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("division by an expression containing x at position {pos}")]
    DivisionByX { pos: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed report: {0}")]
    MalformedReport(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
