//! Symmetry models acting on commutative coordinate algebras, the cocycle
//! twists they induce, and the derived rewrite systems.

pub mod error;
pub mod hopf;
pub mod model;
pub mod twist;

pub use error::TwistError;
pub use hopf::HopfMonomial;
pub use model::{AlgebraSpace, CoactionTerm, TwistModel};
pub use twist::{
    add_smash_rules, classical_to_star, crossed_module_defect, derive_relations, hopf_relations,
    smash_relations, star_fold, twist_product,
};
