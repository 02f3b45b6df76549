//! The projector P = 𝟙 − Vρ⁻²V* and its Grassmann curvature on classical ℝ⁴.
//!
//! Points of ℝ⁴ are lifted to ℂ⁴ through the fibre coordinate (w₁, w₂):
//! z = (w₁, w₂, ζ̄₁w₁ + ζ̄₂w₂, ζ₁w₂ − ζ₂w₁). The default fibre point is (1, 0).

use crate::error::InstantonError;
use crate::point::PointR4;
use monad::{build_monad, dagger, ADHMData, CMatrix};
use serde::Serialize;
use star_algebra::Complex64;

/// Smallest singular value of ρ² accepted before a point counts as singular.
pub const RHO_CUTOFF: f64 = 1e-10;

/// Curvature components F_{μν} in the real coordinates
/// (Re ζ₁, Im ζ₁, Re ζ₂, Im ζ₂).
pub type Curvature = [[CMatrix; 4]; 4];

/// J(z) = (−z̄₂, z̄₁, −z̄₄, z̄₃).
pub fn quaternionic_j(z: [Complex64; 4]) -> [Complex64; 4] {
    [-z[1].conj(), z[0].conj(), -z[3].conj(), z[2].conj()]
}

fn lift(x: &PointR4, w: [Complex64; 2]) -> [Complex64; 4] {
    let (a, b) = (x.zeta1, x.zeta2);
    [w[0], w[1], a.conj() * w[0] + b.conj() * w[1], a * w[1] - b * w[0]]
}

/// ∂z/∂x_μ for the lift above (independent of the point).
fn lift_derivatives(w: [Complex64; 2]) -> [[Complex64; 4]; 4] {
    let zero = Complex64::new(0.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    [
        [zero, zero, w[0], w[1]],
        [zero, zero, -i * w[0], i * w[1]],
        [zero, zero, w[1], -w[0]],
        [zero, zero, -i * w[1], -i * w[0]],
    ]
}

/// V = (σ_z, σ_{J(z)}) at a point and its four real derivatives.
#[derive(Clone, Debug)]
pub struct Frame {
    pub k: usize,
    pub point: PointR4,
    pub sigma: CMatrix,
    pub sigma_j: CMatrix,
    pub dv: [CMatrix; 4],
}

impl Frame {
    pub fn v(&self) -> CMatrix {
        let n = self.sigma.nrows();
        let mut v = CMatrix::zeros(n, 2 * self.k);
        v.view_mut((0, 0), (n, self.k)).copy_from(&self.sigma);
        v.view_mut((0, self.k), (n, self.k)).copy_from(&self.sigma_j);
        v
    }

    /// σ ↦ Uσ for a constant (2k+2)×(2k+2) matrix.
    pub fn left_mul(&self, u: &CMatrix) -> Frame {
        Frame {
            k: self.k,
            point: self.point,
            sigma: u * &self.sigma,
            sigma_j: u * &self.sigma_j,
            dv: std::array::from_fn(|m| u * &self.dv[m]),
        }
    }

    /// σ_z ↦ σ_z W and σ_{J(z)} ↦ σ_{J(z)} W̄ for a constant invertible k×k W.
    pub fn right_mul(&self, w: &CMatrix) -> Frame {
        let k = self.k;
        let mut big = CMatrix::zeros(2 * k, 2 * k);
        big.view_mut((0, 0), (k, k)).copy_from(w);
        big.view_mut((k, k), (k, k)).copy_from(&w.map(|z| z.conj()));
        Frame {
            k,
            point: self.point,
            sigma: &self.sigma * w,
            sigma_j: &self.sigma_j * w.map(|z| z.conj()),
            dv: std::array::from_fn(|m| &self.dv[m] * &big),
        }
    }
}

fn require_classical(data: &ADHMData) -> Result<(), InstantonError> {
    if data.model.is_trivial() {
        Ok(())
    } else {
        Err(InstantonError::NotClassical(data.model.name().into()))
    }
}

/// Evaluates the frame at `x` over the fibre point `w`.
pub fn frame_at(data: &ADHMData, x: &PointR4, w: [Complex64; 2]) -> Result<Frame, InstantonError> {
    require_classical(data)?;
    if !x.is_finite() {
        return Err(InstantonError::Invalid("point has non-finite coordinates".into()));
    }
    let (m, _) = build_monad(data)?.numeric()?;
    let lin = |z: [Complex64; 4]| -> CMatrix {
        let mut acc = CMatrix::zeros(m[0].nrows(), m[0].ncols());
        for j in 0..4 {
            acc += &m[j] * z[j];
        }
        acc
    };
    let z = lift(x, w);
    let dz = lift_derivatives(w);
    let k = data.k;
    let n = 2 * k + 2;
    let dv = std::array::from_fn(|mu| {
        let mut d = CMatrix::zeros(n, 2 * k);
        d.view_mut((0, 0), (n, k)).copy_from(&lin(dz[mu]));
        d.view_mut((0, k), (n, k)).copy_from(&lin(quaternionic_j(dz[mu])));
        d
    });
    Ok(Frame { k, point: *x, sigma: lin(z), sigma_j: lin(quaternionic_j(z)), dv })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectionSample {
    pub point: PointR4,
    #[serde(skip)]
    pub v: CMatrix,
    #[serde(skip)]
    pub rho2: CMatrix,
    #[serde(skip)]
    pub q: CMatrix,
    #[serde(skip)]
    pub p: CMatrix,
    #[serde(skip)]
    pub q_z: CMatrix,
    #[serde(skip)]
    pub q_jz: CMatrix,
    #[serde(skip)]
    pub f: Option<Curvature>,
    pub asd_residual: Option<f64>,
    /// ‖V*V − diag(ρ², ρ²)‖.
    pub gram_defect: f64,
    pub trace_q: f64,
    pub trace_p: f64,
    /// max of ‖P² − P‖, ‖P − P*‖, ‖Q² − Q‖, ‖Q − Q*‖.
    pub idempotent_defect: f64,
    /// ‖Q_z Q_{J(z)}‖.
    pub orthogonality_defect: f64,
}

fn smallest_singular(m: &CMatrix) -> f64 {
    m.clone().svd(false, false).singular_values.iter().copied().fold(f64::INFINITY, f64::min)
}

fn inverse(m: &CMatrix) -> CMatrix {
    m.clone().try_inverse().expect("checked nonsingular")
}

/// Volume form relative to dx⁰dx¹dx²dx³. ℝ⁴ is oriented by the complex
/// coordinates (ζ̄₁, ζ₂), in which σ_z over the fibre point (1, 0) is
/// holomorphic; that is the opposite of (Re ζ₁, Im ζ₁, Re ζ₂, Im ζ₂).
pub const ORIENTATION: f64 = -1.0;

/// Hodge star on 2-forms of Euclidean ℝ⁴ with the orientation above.
pub fn hodge(f: &Curvature) -> Curvature {
    let o = ORIENTATION;
    let pairs = [((0, 1), (2, 3), o), ((0, 2), (1, 3), -o), ((0, 3), (1, 2), o)];
    let n = f[0][0].nrows();
    let mut out: Curvature = std::array::from_fn(|_| std::array::from_fn(|_| CMatrix::zeros(n, n)));
    for ((a, b), (c, d), s) in pairs {
        let cs = Complex64::new(s, 0.0);
        out[a][b] = &f[c][d] * cs;
        out[c][d] = &f[a][b] * cs;
        let (nab, ncd) = (-&out[a][b], -&out[c][d]);
        out[b][a] = nab;
        out[d][c] = ncd;
    }
    out
}

fn curvature_norm(f: &Curvature) -> f64 {
    let mut s = 0.0;
    for a in 0..4 {
        for b in a + 1..4 {
            s += f[a][b].norm_squared();
        }
    }
    s.sqrt()
}

/// ‖F + *F‖ / ‖F‖ over the six independent components.
pub fn asd_residual(f: &Curvature) -> f64 {
    let star = hodge(f);
    let sum: Curvature = std::array::from_fn(|a| std::array::from_fn(|b| &f[a][b] + &star[a][b]));
    curvature_norm(&sum) / curvature_norm(f)
}

/// F_{μν} = P(∂_μV G⁻¹ ∂_νV* − ∂_νV G⁻¹ ∂_μV*)P with G = V*V.
fn curvature(frame: &Frame, p: &CMatrix, ginv: &CMatrix) -> Curvature {
    let n = p.nrows();
    let mut f: Curvature = std::array::from_fn(|_| std::array::from_fn(|_| CMatrix::zeros(n, n)));
    for a in 0..4 {
        for b in a + 1..4 {
            let t = &frame.dv[a] * ginv * dagger(&frame.dv[b]);
            let fab = p * (&t - dagger(&t)) * p;
            f[b][a] = -&fab;
            f[a][b] = fab;
        }
    }
    f
}

/// Projectors and (optionally) curvature from a frame. Q = VG⁻¹V* uses the
/// full Gram matrix G = V*V, so it is insensitive to V ↦ VW.
pub fn sample_from_frame(frame: &Frame, with_curvature: bool) -> Result<ConnectionSample, InstantonError> {
    let k = frame.k;
    let v = frame.v();
    let rho2 = dagger(&frame.sigma) * &frame.sigma;
    let gram = dagger(&v) * &v;
    let smin = smallest_singular(&gram);
    if !(smin >= RHO_CUTOFF) {
        let [re1, im1, re2, im2] = frame.point.to_real();
        return Err(InstantonError::SingularRho { re1, im1, re2, im2, sigma_min: smin });
    }
    let mut block = CMatrix::zeros(2 * k, 2 * k);
    block.view_mut((0, 0), (k, k)).copy_from(&rho2);
    block.view_mut((k, k), (k, k)).copy_from(&rho2);
    let gram_defect = (&gram - &block).norm();

    let ginv = inverse(&gram);
    let n = v.nrows();
    let q = &v * &ginv * dagger(&v);
    let p = CMatrix::identity(n, n) - &q;
    let r1 = inverse(&rho2);
    let rj = inverse(&(dagger(&frame.sigma_j) * &frame.sigma_j));
    let q_z = &frame.sigma * r1 * dagger(&frame.sigma);
    let q_jz = &frame.sigma_j * rj * dagger(&frame.sigma_j);
    let idempotent_defect = [
        (&p * &p - &p).norm(),
        (&p - dagger(&p)).norm(),
        (&q * &q - &q).norm(),
        (&q - dagger(&q)).norm(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    let (f, asd) = if with_curvature {
        let f = curvature(frame, &p, &ginv);
        let r = asd_residual(&f);
        (Some(f), Some(r))
    } else {
        (None, None)
    };
    Ok(ConnectionSample {
        point: frame.point,
        trace_q: q.trace().re,
        trace_p: p.trace().re,
        orthogonality_defect: (&q_z * &q_jz).norm(),
        v,
        rho2,
        q,
        p,
        q_z,
        q_jz,
        f,
        asd_residual: asd,
        gram_defect,
        idempotent_defect,
    })
}

/// Projector data at a point (no curvature).
pub fn evaluate_projector(data: &ADHMData, x: &PointR4) -> Result<ConnectionSample, InstantonError> {
    sample_from_frame(&frame_at(data, x, fibre_origin())?, false)
}

/// Projector and curvature at a point.
pub fn evaluate_connection(data: &ADHMData, x: &PointR4) -> Result<ConnectionSample, InstantonError> {
    sample_from_frame(&frame_at(data, x, fibre_origin())?, true)
}

pub fn fibre_origin() -> [Complex64; 2] {
    [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
}

/// Curvature from central differences of P: F_{μν} = P(∂_μP ∂_νP − ∂_νP ∂_μP)P.
pub fn curvature_fd(data: &ADHMData, x: &PointR4, h: f64) -> Result<Curvature, InstantonError> {
    let p0 = evaluate_projector(data, x)?.p;
    let mut dp = Vec::with_capacity(4);
    for mu in 0..4 {
        let pp = evaluate_projector(data, &x.shifted(mu, h))?.p;
        let pm = evaluate_projector(data, &x.shifted(mu, -h))?.p;
        dp.push((pp - pm) / Complex64::new(2.0 * h, 0.0));
    }
    let n = p0.nrows();
    let mut f: Curvature = std::array::from_fn(|_| std::array::from_fn(|_| CMatrix::zeros(n, n)));
    for a in 0..4 {
        for b in 0..4 {
            if a != b {
                f[a][b] = &p0 * (&dp[a] * &dp[b] - &dp[b] * &dp[a]) * &p0;
            }
        }
    }
    Ok(f)
}

/// Relative Frobenius distance between two curvatures.
pub fn curvature_distance(a: &Curvature, b: &Curvature) -> f64 {
    let diff: Curvature = std::array::from_fn(|m| std::array::from_fn(|n| &a[m][n] - &b[m][n]));
    curvature_norm(&diff) / curvature_norm(a).max(f64::MIN_POSITIVE)
}

/// (1/8π²) tr(F∧F) against the oriented volume form:
/// (1/4π²) Re tr(F₀₁F₂₃ − F₀₂F₁₃ + F₀₃F₁₂) times the orientation sign.
pub fn charge_density(f: &Curvature) -> f64 {
    let t = (&f[0][1] * &f[2][3] - &f[0][2] * &f[1][3] + &f[0][3] * &f[1][2]).trace().re;
    ORIENTATION * t / (4.0 * std::f64::consts::PI * std::f64::consts::PI)
}
