use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term {0} is not a unit")]
    NotAUnit(String),

    #[error("constant term {0} is nonzero; exponential needs a nilpotent argument")]
    NotNilpotent(String),

    #[error("coefficient index {index} exceeds truncation order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("polynomial {0} depends on l; expected a polynomial in x only")]
    WrongVariable(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
