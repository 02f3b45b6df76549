use hopf_twist::TwistError;
use star_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MonadError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("invalid ADHM data: {0}")]
    InvalidData(String),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
