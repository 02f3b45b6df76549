//! Numerical solution of the (deformed) ADHM equations, the U(k) gauge
//! action, and tangent-space dimension counts.

pub mod constraints;
pub mod error;
pub mod gauge;
pub mod moduli;
pub mod solve;

pub use constraints::{constraint_count, constraint_vector, jacobian, variable_count};
pub use error::SolverError;
pub use gauge::{frame_rotate, gauge_align, gauge_distance, polar_unitary, random_unitary};
pub use moduli::{moduli_dimension, JacobianAnalysis, RANK_RTOL};
pub use solve::{solve, solve_with_report, SolveConfig, SolveReport, StartRecord};
