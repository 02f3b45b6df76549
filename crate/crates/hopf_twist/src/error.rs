use star_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TwistError {
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("no coaction defined for generator {0}")]
    MissingCoaction(String),
    #[error("derived relations failed validation: {0}")]
    NonConfluent(String),
    #[error("invalid model parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
