use hopf_twist::TwistError;
use monad::MonadError;
use star_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InstantonError {
    /// The point lies on the zero-size locus.
    #[error("rho^2 is singular at ({re1}, {im1}, {re2}, {im2}): smallest singular value {sigma_min:e}")]
    SingularRho { re1: f64, im1: f64, re2: f64, im2: f64, sigma_min: f64 },
    #[error("numeric evaluation needs classical data, got model {0}")]
    NotClassical(String),
    #[error("quadrature needs {points} points, budget is {budget}")]
    QuadratureBudgetExceeded { points: usize, budget: usize },
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Monad(#[from] MonadError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Twist(#[from] TwistError),
}
