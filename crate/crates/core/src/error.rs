use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not standard: {0}")]
    NotStandard(String),

    #[error("monomial is not standard: {0}")]
    NonStandardMonomial(String),

    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),

    #[error("the smallest tableau admits no marked step")]
    SmallestTableau,

    #[error("vector is not weight-homogeneous")]
    NotHomogeneous,

    #[error("shape {shape} is too small for weight {weight}: {detail}")]
    InsufficientShape {
        shape: String,
        weight: String,
        detail: String,
    },

    #[error("theorem violation in {check}: {witness}")]
    TheoremViolation { check: String, witness: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
