use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use star_algebra::Complex64;

/// A point (ζ₁, ζ₂) of ℝ⁴ = ℂ².
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointR4 {
    pub zeta1: Complex64,
    pub zeta2: Complex64,
}

impl PointR4 {
    pub fn new(zeta1: Complex64, zeta2: Complex64) -> Self {
        PointR4 { zeta1, zeta2 }
    }

    /// From real coordinates (Re ζ₁, Im ζ₁, Re ζ₂, Im ζ₂).
    pub fn from_real(x: [f64; 4]) -> Self {
        PointR4 { zeta1: Complex64::new(x[0], x[1]), zeta2: Complex64::new(x[2], x[3]) }
    }

    pub fn to_real(&self) -> [f64; 4] {
        [self.zeta1.re, self.zeta1.im, self.zeta2.re, self.zeta2.im]
    }

    pub fn is_finite(&self) -> bool {
        self.to_real().iter().all(|v| v.is_finite())
    }

    pub fn shifted(&self, dir: usize, h: f64) -> Self {
        let mut x = self.to_real();
        x[dir] += h;
        Self::from_real(x)
    }
}

/// `n` Gaussian points around `center` with standard deviation `spread` per
/// real coordinate.
pub fn sample_points(n: usize, seed: u64, center: [f64; 4], spread: f64) -> Vec<PointR4> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let mut x = center;
            for v in &mut x {
                let g: f64 = StandardNormal.sample(&mut rng);
                *v += spread * g;
            }
            PointR4::from_real(x)
        })
        .collect()
}
