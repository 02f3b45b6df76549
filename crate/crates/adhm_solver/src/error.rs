use monad::MonadError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("no multistart reached tolerance {tolerance:e}; best residual {best_residual:e} after {starts} starts")]
    NoConvergence { best_residual: f64, tolerance: f64, starts: usize },
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
    #[error("zeta {given} does not match the model level {expected}")]
    ZetaMismatch { given: f64, expected: f64 },
    #[error("data is not a solution: residual {0:e}")]
    NotASolution(f64),
    #[error("degenerate solution: constraint rank {rank} < {expected}")]
    DegenerateSolution { rank: usize, expected: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Monad(#[from] MonadError),
}
