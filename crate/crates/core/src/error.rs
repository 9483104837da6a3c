use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {order} exceeds the supported maximum {max} for {operation}")]
    TooLarge {
        operation: &'static str,
        order: usize,
        max: usize,
    },
    #[error("invalid adjacency: {0}")]
    InvalidAdjacency(String),
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("invalid part sizes: {0}")]
    InvalidParts(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("flag basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
