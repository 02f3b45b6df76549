//! Finitely presented *-algebras over formal parameters ħ and μ.
//!
//! Elements are [`NCPolynomial`]s; a [`RelationSystem`] holds oriented
//! rewrite rules and reduces words to a unique normal form.

pub mod coefficient;
pub mod error;
pub mod generator;
pub mod polynomial;
pub mod relations;
pub mod render;
pub mod report;

pub use coefficient::{Coefficient, COEFF_TOL};
pub use error::AlgebraError;
pub use generator::{GeneratorId, Space};
pub use polynomial::{Monomial, NCPolynomial};
pub use relations::{
    adjoint, differential, multiply, normal_form, reduce_by_choice, RelationSystem,
};
pub use render::{render_json, render_text};
pub use report::{Check, Report};
pub use num_complex::Complex64;
