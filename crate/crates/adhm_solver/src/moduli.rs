//! Tangent-space dimension count at a solution.

use crate::constraints::{constraint_count, jacobian, variable_count};
use crate::error::SolverError;
use monad::{adhm_residual, ADHMData, CMatrix};
use nalgebra::DMatrix;
use serde::Serialize;
use star_algebra::Complex64;

/// Relative SVD cutoff for numerical rank.
pub const RANK_RTOL: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JacobianAnalysis {
    pub singular_values: Vec<f64>,
    /// Absolute cutoff RANK_RTOL·σ_max.
    pub rank_threshold: f64,
    pub constraint_rank: usize,
    pub raw_nullity: usize,
    pub framed_dimension: i64,
    pub gauge_dimension: usize,
    pub frame_rotation_rank: usize,
    /// Constraints are not independent (a cone point).
    pub degenerate: bool,
}

impl JacobianAnalysis {
    /// framed_dimension − frame_rotation_rank; 8k−3 at generic points.
    pub fn unframed_dimension(&self) -> i64 {
        self.framed_dimension - self.frame_rotation_rank as i64
    }

    pub fn require_regular(&self, k: usize) -> Result<(), SolverError> {
        if self.degenerate {
            return Err(SolverError::DegenerateSolution { rank: self.constraint_rank, expected: constraint_count(k) });
        }
        Ok(())
    }
}

fn numerical_rank(m: &DMatrix<f64>) -> (Vec<f64>, f64, usize) {
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    let smax = sv.first().copied().unwrap_or(0.0);
    let thr = RANK_RTOL * smax;
    let rank = if smax == 0.0 { 0 } else { sv.iter().filter(|&&s| s >= thr).count() };
    (sv, thr, rank)
}

fn flat(d: &ADHMData) -> Vec<f64> {
    d.to_real_vector()
}

/// Tangent vectors of the U(k) orbit: δB = [ξ,B], δI = ξI, δJ = −Jξ.
pub fn gauge_tangents(data: &ADHMData) -> Vec<Vec<f64>> {
    let k = data.k;
    let mut out = Vec::new();
    let unit = |a: usize, b: usize, z: Complex64| {
        let mut m = CMatrix::zeros(k, k);
        m[(a, b)] += z;
        m
    };
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let mut basis = Vec::new();
    for a in 0..k {
        basis.push(unit(a, a, i));
        for b in a + 1..k {
            basis.push(unit(a, b, one) - unit(b, a, one));
            basis.push(unit(a, b, i) + unit(b, a, i));
        }
    }
    for xi in basis {
        let t = ADHMData {
            b1: &xi * &data.b1 - &data.b1 * &xi,
            b2: &xi * &data.b2 - &data.b2 * &xi,
            i: &xi * &data.i,
            j: -(&data.j * &xi),
            ..data.clone()
        };
        out.push(flat(&t));
    }
    out
}

/// Tangent vectors of SU(2) frame rotations: δI = −IX, δJ = XJ.
pub fn frame_tangents(data: &ADHMData) -> Vec<Vec<f64>> {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let pauli_i = [
        CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., 1.), c(0., 1.), c(0., 0.)]),
        CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(-1., 0.), c(0., 0.)]),
        CMatrix::from_row_slice(2, 2, &[c(0., 1.), c(0., 0.), c(0., 0.), c(0., -1.)]),
    ];
    pauli_i
        .iter()
        .map(|x| {
            let k = data.k;
            let t = ADHMData {
                b1: CMatrix::zeros(k, k),
                b2: CMatrix::zeros(k, k),
                i: -(&data.i * x),
                j: x * &data.j,
                ..data.clone()
            };
            flat(&t)
        })
        .collect()
}

fn columns(vs: &[Vec<f64>], n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, vs.len(), |r, c| vs[c][r])
}

/// SVD of the real constraint Jacobian at a solution.
pub fn moduli_dimension(data: &ADHMData) -> Result<JacobianAnalysis, SolverError> {
    let (ce, re) = adhm_residual(data)?;
    if ce + re > 1e-10 {
        return Err(SolverError::NotASolution(ce + re));
    }
    let k = data.k;
    let n = variable_count(k);
    let jac = jacobian(k, data.model, &data.to_real_vector());
    let (singular_values, rank_threshold, constraint_rank) = numerical_rank(&jac);
    let raw_nullity = n - constraint_rank;
    let gauge_dimension = k * k;

    let gauge = gauge_tangents(data);
    let mut both = gauge.clone();
    both.extend(frame_tangents(data));
    let (_, _, rg) = numerical_rank(&columns(&gauge, n));
    let (_, _, rb) = numerical_rank(&columns(&both, n));

    Ok(JacobianAnalysis {
        singular_values,
        rank_threshold,
        constraint_rank,
        raw_nullity,
        framed_dimension: raw_nullity as i64 - gauge_dimension as i64,
        gauge_dimension,
        frame_rotation_rank: rb - rg,
        degenerate: constraint_rank < constraint_count(k),
    })
}
