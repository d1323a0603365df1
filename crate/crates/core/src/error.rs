use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at q = {0}")]
    Pole(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("relation is not homogeneous of degree 2: {0}")]
    NotHomogeneous(String),

    #[error("degree {requested} exceeds completion bound {bound}")]
    DegreeBound { requested: usize, bound: usize },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),

    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
