use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at a pole")]
    Pole,
    #[error("generator index out of range: {index} (strands = {strands})")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("odd sqrt(lambda) grading in an assembled equation scalar")]
    Parity,
    #[error("no decomposition into lower-order monomials exists within the search bounds")]
    NotDecomposable,
}

pub type Result<T> = std::result::Result<T, SkeinError>;

impl SkeinError {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        SkeinError::Parse { pos, msg: msg.into() }
    }
}
