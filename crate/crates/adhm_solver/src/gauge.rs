//! The U(k) action on ADHM data and distance to a gauge orbit.

use crate::error::SolverError;
use monad::{dagger, ADHMData, CMatrix};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use star_algebra::Complex64;

/// Unitary factor of the polar decomposition.
pub fn polar_unitary(m: &CMatrix) -> CMatrix {
    let svd = m.clone().svd(true, true);
    let u = svd.u.expect("u requested");
    let v_t = svd.v_t.expect("v_t requested");
    u * v_t
}

/// Haar-ish random unitary: polar factor of a complex Gaussian matrix.
pub fn random_unitary<R: Rng>(k: usize, rng: &mut R) -> CMatrix {
    let g = DMatrix::from_fn(k, k, |_, _| {
        let (re, im): (f64, f64) = (StandardNormal.sample(&mut *rng), StandardNormal.sample(&mut *rng));
        Complex64::new(re, im)
    });
    polar_unitary(&g)
}

fn distance_at(a: &ADHMData, b: &ADHMData, g: &CMatrix) -> f64 {
    let gb = b.gauge_transform(g);
    ((&a.b1 - &gb.b1).norm_squared()
        + (&a.b2 - &gb.b2).norm_squared()
        + (&a.i - &gb.i).norm_squared()
        + (&a.j - &gb.j).norm_squared())
    .sqrt()
}

/// Euclidean gradient of Re⟨a, g·b⟩ with respect to g.
fn gradient(a: &ADHMData, b: &ADHMData, g: &CMatrix) -> CMatrix {
    let mut out = &a.i * dagger(&b.i) + dagger(&a.j) * &b.j;
    for (x, y) in [(&a.b1, &b.b1), (&a.b2, &b.b2)] {
        out += x * g * dagger(y) + dagger(x) * g * y;
    }
    out
}

fn align(a: &ADHMData, b: &ADHMData, mut g: CMatrix) -> (f64, CMatrix) {
    let mut best = distance_at(a, b, &g);
    for _ in 0..500 {
        let next = polar_unitary(&gradient(a, b, &g));
        let d = distance_at(a, b, &next);
        let gain = best - d;
        g = next;
        best = best.min(d);
        if gain.abs() <= 1e-15 * (1.0 + best) {
            break;
        }
    }
    (distance_at(a, b, &g), g)
}

/// min over g ∈ U(k) of the Frobenius distance between a and g·b (all four
/// blocks together), with the minimising g. Polar iterations on the
/// linearised objective from the identity, the I/J Procrustes solution, and
/// a fixed set of random unitaries.
pub fn gauge_align(a: &ADHMData, b: &ADHMData) -> Result<(f64, CMatrix), SolverError> {
    if a.k != b.k {
        return Err(SolverError::Shape(format!("k = {} vs k = {}", a.k, b.k)));
    }
    if a.model.name() != b.model.name() {
        return Err(SolverError::Shape(format!("model {} vs {}", a.model.name(), b.model.name())));
    }
    a.validate()?;
    b.validate()?;
    let k = a.k;
    let mut starts = vec![CMatrix::identity(k, k)];
    let ij = &a.i * dagger(&b.i) + dagger(&a.j) * &b.j;
    if ij.norm() > 0.0 {
        starts.push(polar_unitary(&ij));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a09_e667);
    starts.extend((0..8).map(|_| random_unitary(k, &mut rng)));
    let mut best = (f64::INFINITY, CMatrix::identity(k, k));
    for g in starts {
        let cand = align(a, b, g);
        if cand.0 < best.0 {
            best = cand;
        }
    }
    Ok(best)
}

pub fn gauge_distance(a: &ADHMData, b: &ADHMData) -> Result<f64, SolverError> {
    gauge_align(a, b).map(|(d, _)| d)
}

/// SU(2) frame rotation of the framing: I ↦ I h⁻¹, J ↦ h J.
pub fn frame_rotate(data: &ADHMData, h: &CMatrix) -> ADHMData {
    ADHMData { i: &data.i * dagger(h), j: h * &data.j, ..data.clone() }
}
