//! The ADHM equations as a real map ℝ^{4k²+8k} → ℝ^{3k²}.

use hopf_twist::TwistModel;
use monad::{ADHMData, CMatrix};
use nalgebra::{DMatrix, DVector};

/// Number of real parameters 2·(2k² + 4k).
pub fn variable_count(k: usize) -> usize {
    4 * k * k + 8 * k
}

/// Number of real constraints: 2k² from the complex equation, k² from the
/// Hermitian one.
pub fn constraint_count(k: usize) -> usize {
    3 * k * k
}

/// Real components of both equations. Off-diagonal Hermitian entries are
/// scaled by √2 so that the Euclidean norm equals the Frobenius norm.
pub fn constraint_vector(data: &ADHMData) -> DVector<f64> {
    let k = data.k;
    let c = data.complex_equation();
    let h = data.real_equation();
    let mut out = Vec::with_capacity(constraint_count(k));
    for z in c.iter() {
        out.push(z.re);
        out.push(z.im);
    }
    push_hermitian(&h, &mut out);
    DVector::from_vec(out)
}

fn push_hermitian(h: &CMatrix, out: &mut Vec<f64>) {
    let k = h.nrows();
    let s = std::f64::consts::SQRT_2;
    for a in 0..k {
        out.push(h[(a, a)].re);
        for b in a + 1..k {
            out.push(s * h[(a, b)].re);
            out.push(s * h[(a, b)].im);
        }
    }
}

pub(crate) fn eval(k: usize, model: TwistModel, x: &[f64]) -> DVector<f64> {
    let d = ADHMData::from_real_vector(k, model, x).expect("length checked by caller");
    constraint_vector(&d)
}

/// Central-difference Jacobian. The map is quadratic, so the central
/// difference has no truncation error and only rounding remains.
pub fn jacobian(k: usize, model: TwistModel, x: &[f64]) -> DMatrix<f64> {
    let h = 1e-3;
    let n = x.len();
    let m = constraint_count(k);
    let mut jac = DMatrix::zeros(m, n);
    let mut xp = x.to_vec();
    for col in 0..n {
        xp[col] = x[col] + h;
        let fp = eval(k, model, &xp);
        xp[col] = x[col] - h;
        let fm = eval(k, model, &xp);
        xp[col] = x[col];
        jac.set_column(col, &((fp - fm) / (2.0 * h)));
    }
    jac
}
