//! Instanton projectors and Grassmann connections from ADHM data.

pub mod asd;
pub mod charge;
pub mod error;
pub mod point;
pub mod projector;
pub mod symbolic;

pub use error::InstantonError;
pub use point::{sample_points, PointR4};
pub use projector::*;
pub use asd::{curvature_asd, curvature_fd_check, projector_report, ASD_TOL, FD_STEP, FD_TOL};
pub use charge::{charge, charge_detailed, data_center, data_scale, gauss_legendre01, instanton_centres, ChargeResult, QuadratureSpec};
pub use symbolic::{centrality_defect, rho2_centrality, symbolic_projector_checks, SYMBOLIC_TOL};
