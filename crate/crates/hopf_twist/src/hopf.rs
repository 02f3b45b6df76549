//! Monomials in the two commutative Hopf algebras: polynomials in the
//! translation generators t₁, t₁*, t₂, t₂* and Laurent monomials on the torus.

use crate::error::TwistError;
use serde::{Deserialize, Serialize};
use star_algebra::GeneratorId;

/// Slot order of translation exponents.
pub const TRANS_SLOTS: [(u8, bool); 4] = [(1, false), (1, true), (2, false), (2, true)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum HopfMonomial {
    /// Exponents of (t₁, t₁*, t₂, t₂*). Each t is primitive.
    Trans([u32; 4]),
    /// s₁^m₁ s₂^m₂. Group-like.
    Torus([i32; 2]),
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

impl HopfMonomial {
    pub const TRANS_ONE: HopfMonomial = HopfMonomial::Trans([0; 4]);
    pub const TORUS_ONE: HopfMonomial = HopfMonomial::Torus([0; 2]);

    /// The single translation generator t_j (or t_j*).
    pub fn t(j: u8, conjugated: bool) -> Self {
        let mut e = [0; 4];
        e[slot(j, conjugated)] = 1;
        HopfMonomial::Trans(e)
    }

    /// ς_j on the torus: ς₁ = s₁, ς₂ = s₁⁻¹, ς₃ = s₂, ς₄ = s₂⁻¹.
    pub fn varsigma(j: u8) -> Self {
        let w = match j {
            1 => [1, 0],
            2 => [-1, 0],
            3 => [0, 1],
            _ => [0, -1],
        };
        HopfMonomial::Torus(w)
    }

    pub fn unit_like(&self) -> Self {
        match self {
            HopfMonomial::Trans(_) => Self::TRANS_ONE,
            HopfMonomial::Torus(_) => Self::TORUS_ONE,
        }
    }

    pub fn is_unit(&self) -> bool {
        *self == self.unit_like()
    }

    /// Total polynomial degree (translations) or 0 (torus).
    pub fn degree(&self) -> u32 {
        match self {
            HopfMonomial::Trans(e) => e.iter().sum(),
            HopfMonomial::Torus(_) => 0,
        }
    }

    pub fn mul(&self, other: &HopfMonomial) -> Result<HopfMonomial, TwistError> {
        match (self, other) {
            (HopfMonomial::Trans(a), HopfMonomial::Trans(b)) => {
                Ok(HopfMonomial::Trans([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]))
            }
            (HopfMonomial::Torus(a), HopfMonomial::Torus(b)) => {
                Ok(HopfMonomial::Torus([a[0] + b[0], a[1] + b[1]]))
            }
            _ => Err(TwistError::ModelMismatch("translation and torus monomials mixed".into())),
        }
    }

    pub fn star(&self) -> Self {
        match self {
            HopfMonomial::Trans(e) => HopfMonomial::Trans([e[1], e[0], e[3], e[2]]),
            HopfMonomial::Torus(m) => HopfMonomial::Torus([-m[0], -m[1]]),
        }
    }

    pub fn counit(&self) -> f64 {
        match self {
            HopfMonomial::Trans(_) => {
                if self.is_unit() {
                    1.0
                } else {
                    0.0
                }
            }
            HopfMonomial::Torus(_) => 1.0,
        }
    }

    /// Δ as a list of (coefficient, left, right).
    pub fn coproduct(&self) -> Vec<(f64, HopfMonomial, HopfMonomial)> {
        self.coproduct_n(2)
            .into_iter()
            .map(|(c, v)| (c, v[0], v[1]))
            .collect()
    }

    /// Iterated coproduct into `n ≥ 1` tensor factors.
    pub fn coproduct_n(&self, n: usize) -> Vec<(f64, Vec<HopfMonomial>)> {
        assert!(n >= 1);
        match self {
            HopfMonomial::Torus(_) => vec![(1.0, vec![*self; n])],
            HopfMonomial::Trans(e) => {
                // split each exponent into n ordered parts with multinomial weights
                let mut out: Vec<(f64, Vec<[u32; 4]>)> = vec![(1.0, vec![[0; 4]; n])];
                for (slot, &p) in e.iter().enumerate() {
                    let mut next = Vec::new();
                    for (c, parts) in &out {
                        for (w, split) in compositions(p, n) {
                            let mut parts = parts.clone();
                            for (i, s) in split.iter().enumerate() {
                                parts[i][slot] = *s;
                            }
                            next.push((c * w, parts));
                        }
                    }
                    out = next;
                }
                out.into_iter()
                    .map(|(c, parts)| (c, parts.into_iter().map(HopfMonomial::Trans).collect()))
                    .collect()
            }
        }
    }

    /// The monomial as an ordered word of Hopf generators.
    pub fn to_word(&self) -> Vec<GeneratorId> {
        let mut w = Vec::new();
        match self {
            HopfMonomial::Trans(e) => {
                for (i, &(j, c)) in TRANS_SLOTS.iter().enumerate() {
                    let g = if c { GeneratorId::t(j).star() } else { GeneratorId::t(j) };
                    w.extend(std::iter::repeat_n(g, e[i] as usize));
                }
            }
            HopfMonomial::Torus(m) => {
                for (axis, &p) in m.iter().enumerate() {
                    let base = 2 * axis as u8 + 1;
                    let g = if p >= 0 { base } else { base + 1 };
                    w.extend(std::iter::repeat_n(GeneratorId::varsigma(g), p.unsigned_abs() as usize));
                }
            }
        }
        w
    }

    /// Monomial of a single Hopf generator letter.
    pub fn from_generator(g: GeneratorId) -> Option<Self> {
        match g.space {
            star_algebra::Space::HopfTrans => Some(Self::t(g.index, g.conjugated)),
            star_algebra::Space::HopfTorus => Some(Self::varsigma(g.index)),
            _ => None,
        }
    }

    pub fn exponent(&self, j: u8, conjugated: bool) -> u32 {
        match self {
            HopfMonomial::Trans(e) => e[slot(j, conjugated)],
            HopfMonomial::Torus(_) => 0,
        }
    }
}

pub(crate) fn slot(j: u8, conjugated: bool) -> usize {
    2 * (j as usize - 1) + conjugated as usize
}

/// Ordered splits of `p` into `n` nonnegative parts with multinomial weight.
fn compositions(p: u32, n: usize) -> Vec<(f64, Vec<u32>)> {
    if n == 1 {
        return vec![(1.0, vec![p])];
    }
    let mut out = Vec::new();
    for first in 0..=p {
        let w = binomial(p, first);
        for (c, mut rest) in compositions(p - first, n - 1) {
            rest.insert(0, first);
            out.push((w * c, rest));
        }
    }
    out
}
