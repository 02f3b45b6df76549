//! Pointwise reports over lists of points.

use crate::error::InstantonError;
use crate::point::PointR4;
use crate::projector::{curvature_distance, curvature_fd, evaluate_connection, evaluate_projector};
use monad::ADHMData;
use star_algebra::Report;

pub const ASD_TOL: f64 = 1e-6;
pub const FD_TOL: f64 = 1e-3;
pub const FD_STEP: f64 = 1e-5;

/// Largest ‖F + *F‖/‖F‖ over the points.
pub fn curvature_asd(data: &ADHMData, points: &[PointR4]) -> Result<Report, InstantonError> {
    let mut worst: f64 = 0.0;
    for x in points {
        let s = evaluate_connection(data, x)?;
        worst = worst.max(s.asd_residual.expect("curvature requested"));
    }
    let mut rep = Report::new();
    rep.record("asd_residual_max", worst, ASD_TOL);
    Ok(rep)
}

/// Analytic curvature against central differences of P.
pub fn curvature_fd_check(data: &ADHMData, points: &[PointR4]) -> Result<Report, InstantonError> {
    let mut worst: f64 = 0.0;
    for x in points {
        let s = evaluate_connection(data, x)?;
        let fd = curvature_fd(data, x, FD_STEP)?;
        worst = worst.max(curvature_distance(s.f.as_ref().expect("curvature requested"), &fd));
    }
    let mut rep = Report::new();
    rep.record("curvature_fd_agreement", worst, FD_TOL);
    Ok(rep)
}

/// Hermitian idempotents, traces 2k and 2, V*V block identity, and
/// Q_z Q_{J(z)} = 0 at every point.
pub fn projector_report(data: &ADHMData, points: &[PointR4]) -> Result<Report, InstantonError> {
    let k = data.k as f64;
    let (mut tq, mut tp, mut idem, mut gram, mut orth) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for x in points {
        let s = evaluate_projector(data, x)?;
        tq = tq.max((s.trace_q - 2.0 * k).abs());
        tp = tp.max((s.trace_p - 2.0).abs());
        idem = idem.max(s.idempotent_defect);
        gram = gram.max(s.gram_defect);
        orth = orth.max(s.orthogonality_defect);
    }
    let mut rep = Report::new();
    rep.record("trace_q_equals_2k", tq, 1e-10);
    rep.record("trace_p_equals_2", tp, 1e-10);
    rep.record("hermitian_idempotents", idem, 1e-12);
    rep.record("gram_block_rho2", gram, 1e-10);
    rep.record("q_z_q_jz_orthogonal", orth, 1e-12);
    Ok(rep)
}
