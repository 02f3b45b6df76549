use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("rewriting did not terminate within {steps} steps")]
    NonTerminating { steps: usize },
    #[error("generator {0} is not part of this algebra")]
    UnknownGenerator(String),
    #[error("the algebra has no differential calculus")]
    MissingCalculus,
}
