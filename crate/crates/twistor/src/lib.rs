//! Algebra maps of the twistor fibration CP³ → S⁴ and its localisation over ℝ⁴.

pub mod checks;
pub mod jmap;
pub mod quotient;

pub use checks::{j_coaction_defect, verify_embeddings};
pub use jmap::apply_j;
pub use quotient::QuotientContext;
