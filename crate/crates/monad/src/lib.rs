//! ADHM data, the self-conjugate monads built from it, and the deformed monad
//! condition in the twisted C⁴.

pub mod bosonise;
pub mod data;
pub mod error;
pub mod matrix;
pub mod monad;
pub mod tilde;

pub use bosonise::{bosonic_ambient, bosonisation_report, bosonise_monad, tilde_sigma, BosonisedMonad};
pub use data::{adhm_residual, dagger, ADHMData, CMatrix};
pub use error::MonadError;
pub use matrix::PolyMatrix;
pub use monad::{
    build_monad, c4_relations, monad_residual, residual_coefficient, residual_norm, MonadMatrices,
};
pub use tilde::{tilde_subalgebra_check, TORIC_ETA};
