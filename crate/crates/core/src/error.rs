use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: left operand is {left}, right operand is {right}")]
    ModulusMismatch { left: String, right: String },

    #[error("constant term {0} is not a unit in the coefficient ring")]
    NonUnitConstant(String),

    #[error("cannot reduce a series with modulus {from} to modulus {to}: {to} does not divide {from}")]
    IncompatibleModulus { from: String, to: String },

    #[error("modulus must be positive, got {0}")]
    InvalidModulus(String),

    #[error("series has order {have}, but order {need} is required")]
    OrderTooSmall { have: usize, need: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("array is already specialized at axis {0}")]
    AlreadySpecialized(usize),

    #[error("position {position:?} is out of bounds for shape {shape:?}")]
    OutOfBounds { position: Vec<i64>, shape: Vec<usize> },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
