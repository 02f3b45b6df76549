//! Topological charge by product quadrature in spherical coordinates.

use crate::error::InstantonError;
use crate::point::PointR4;
use crate::projector::{charge_density, evaluate_connection, evaluate_projector};
use monad::ADHMData;
use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureSpec {
    /// Radial nodes 8R, polar nodes R, and 2R nodes on each of the two circles.
    pub resolution: usize,
    /// Centre of the spherical coordinates; defaults to the data's centre.
    pub center: Option<[f64; 4]>,
    /// Radial length scale; defaults to the instanton size.
    pub scale: Option<f64>,
    /// Largest number of curvature evaluations allowed.
    pub budget: usize,
}

impl QuadratureSpec {
    pub fn new(resolution: usize) -> Self {
        QuadratureSpec { resolution, center: None, scale: None, budget: 5_000_000 }
    }

    pub fn point_count(&self) -> usize {
        let r = self.resolution;
        8 * r * r * (2 * r) * (2 * r)
    }
}

/// Gauss-Legendre nodes and weights on [0, 1] (Golub-Welsch).
pub fn gauss_legendre01(n: usize) -> Vec<(f64, f64)> {
    let jac = DMatrix::from_fn(n, n, |i, j| {
        if i + 1 == j || j + 1 == i {
            let m = i.max(j) as f64;
            m / (4.0 * m * m - 1.0).sqrt()
        } else {
            0.0
        }
    });
    let eig = SymmetricEigen::new(jac);
    let mut out: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let x = eig.eigenvalues[i];
            let v0 = eig.eigenvectors[(0, i)];
            (0.5 * (x + 1.0), v0 * v0)
        })
        .collect();
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

/// Centre (−tr B̄₁/k, tr B₂/k) of the instanton in (ζ₁, ζ₂).
pub fn data_center(data: &ADHMData) -> [f64; 4] {
    let k = data.k as f64;
    let z1 = -data.b1.trace().conj() / k;
    let z2 = data.b2.trace() / k;
    [z1.re, z1.im, z2.re, z2.im]
}

/// Size √(tr ρ²/k) at the centre, or 1 when ρ is singular there.
pub fn data_scale(data: &ADHMData) -> f64 {
    let c = data_center(data);
    match evaluate_projector(data, &PointR4::from_real(c)) {
        Ok(s) => (s.rho2.trace().re / data.k as f64).sqrt().max(1e-3),
        Err(_) => 1.0,
    }
}

/// Smallest eigenvalue of ρ² at a point, infinite where ρ is singular.
fn rho_floor(data: &ADHMData, c: [f64; 4]) -> f64 {
    match evaluate_projector(data, &PointR4::from_real(c)) {
        Ok(s) => s.rho2.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min),
        Err(_) => f64::INFINITY,
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Largest k for which the eigenvalue pairing search is run.
pub const MAX_CENTRES: usize = 6;

/// One (centre, scale) per instanton. The centres pair eigenvalues of B₁ and
/// B₂ as (−ē₁, e₂), the pairing being the one that minimises Σ λ_min(ρ²);
/// each scale is √λ_min(ρ²) there.
pub fn instanton_centres(data: &ADHMData) -> Vec<([f64; 4], f64)> {
    let k = data.k;
    if k == 1 || k > MAX_CENTRES {
        return vec![(data_center(data), data_scale(data))];
    }
    let single = vec![(data_center(data), data_scale(data))];
    let (Some(e1), Some(e2)) = (data.b1.clone().eigenvalues(), data.b2.clone().eigenvalues()) else {
        return single;
    };
    let mut best: Option<(f64, Vec<([f64; 4], f64)>)> = None;
    for perm in permutations(k) {
        let cs: Vec<([f64; 4], f64)> = (0..k)
            .map(|a| {
                let z1 = -e1[a].conj();
                let z2 = e2[perm[a]];
                let c = [z1.re, z1.im, z2.re, z2.im];
                (c, rho_floor(data, c))
            })
            .collect();
        let score: f64 = cs.iter().map(|c| c.1).sum();
        if best.as_ref().is_none_or(|b| score < b.0) {
            best = Some((score, cs));
        }
    }
    let (_, cs) = best.expect("k ≥ 1");
    if cs.iter().any(|c| !c.1.is_finite()) {
        return single;
    }
    cs.into_iter().map(|(c, l)| (c, l.sqrt().max(1e-3))).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChargeResult {
    pub charge: f64,
    pub points: usize,
    /// (centre, scale) of each spherical grid.
    pub centres: Vec<([f64; 4], f64)>,
}

fn bump(x: &[f64; 4], c: &([f64; 4], f64)) -> f64 {
    let d2: f64 = (0..4).map(|i| (x[i] - c.0[i]).powi(2)).sum();
    1.0 / (d2 + c.1 * c.1).powi(2)
}

/// (1/8π²)∫tr(F∧F) over ℝ⁴. Around each centre, r = s·u/(1−u) on
/// Gauss-Legendre nodes in u, Gauss-Legendre in the Hopf angle η and the
/// trapezoid rule on both circles. Several centres share the integrand
/// through the partition of unity (|x−a|²+s²)⁻² / Σ.
pub fn charge_detailed(data: &ADHMData, quad: &QuadratureSpec) -> Result<ChargeResult, InstantonError> {
    if quad.resolution == 0 {
        return Err(InstantonError::Invalid("resolution must be positive".into()));
    }
    let centres = match quad.center {
        Some(c) => vec![(c, quad.scale.unwrap_or_else(|| data_scale(data)))],
        None => {
            let mut cs = instanton_centres(data);
            if let (Some(s), 1) = (quad.scale, cs.len()) {
                cs[0].1 = s;
            }
            cs
        }
    };
    let points = quad.point_count() * centres.len();
    if points > quad.budget {
        return Err(InstantonError::QuadratureBudgetExceeded { points, budget: quad.budget });
    }
    let r = quad.resolution;
    let radial = gauss_legendre01(8 * r);
    let polar = gauss_legendre01(r);
    let nc = 2 * r;
    let dphi = 2.0 * PI / nc as f64;
    let mut total = 0.0;
    for piece in &centres {
        let (center, s) = *piece;
        for &(u, wu) in &radial {
            let rad = s * u / (1.0 - u);
            let jac_r = s / ((1.0 - u) * (1.0 - u)) * rad.powi(3);
            for &(t, wt) in &polar {
                let eta = 0.5 * PI * t;
                let (se, ce) = eta.sin_cos();
                // dΩ = sin η cos η dη dξ₁ dξ₂
                let jac_a = 0.5 * PI * se * ce;
                for a in 0..nc {
                    let xi1 = a as f64 * dphi;
                    for b in 0..nc {
                        let xi2 = b as f64 * dphi;
                        let x = [
                            center[0] + rad * ce * xi1.cos(),
                            center[1] + rad * ce * xi1.sin(),
                            center[2] + rad * se * xi2.cos(),
                            center[3] + rad * se * xi2.sin(),
                        ];
                        let weight = if centres.len() == 1 {
                            1.0
                        } else {
                            bump(&x, piece) / centres.iter().map(|c| bump(&x, c)).sum::<f64>()
                        };
                        let sample = evaluate_connection(data, &PointR4::from_real(x))?;
                        let q = charge_density(sample.f.as_ref().expect("curvature requested"));
                        total += wu * wt * dphi * dphi * jac_r * jac_a * q * weight;
                    }
                }
            }
        }
    }
    Ok(ChargeResult { charge: total, points, centres })
}

pub fn charge(data: &ADHMData, quad: &QuadratureSpec) -> Result<f64, InstantonError> {
    charge_detailed(data, quad).map(|c| c.charge)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let rule = gauss_legendre01(6);
        let w: f64 = rule.iter().map(|p| p.1).sum();
        assert!((w - 1.0).abs() < 1e-14);
        let x9: f64 = rule.iter().map(|&(x, w)| w * x.powi(9)).sum();
        assert!((x9 - 0.1).abs() < 1e-14);
    }
}
