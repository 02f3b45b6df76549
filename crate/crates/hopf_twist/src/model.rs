//! Symmetry models: coaction tables, the twisting cocycle and its R-matrix.

use crate::error::TwistError;
use crate::hopf::{slot, HopfMonomial};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use star_algebra::generator::{
    c4_calculus_generators, c4_generators, monad_generators, r4_calculus_generators,
    r4_generators, torus_generators, trans_generators,
};
use star_algebra::{Coefficient, GeneratorId, Monomial, NCPolynomial, Space};

/// Which deformation is in force. `Classical` uses the translation coaction
/// with the trivial cocycle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum TwistModel {
    Classical,
    Moyal { hbar: f64, alpha: f64, beta: f64 },
    Toric { theta: f64 },
}

/// An ambient algebra for which relations can be derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlgebraSpace {
    C4,
    C4Calculus,
    R4,
    R4Calculus,
    /// Entries of M¹..M⁴ (and conjugates) for the given k.
    Monad(usize),
    /// Monad entries together with z₁..z₄: the twisted tensor product.
    MonadC4(usize),
}

impl AlgebraSpace {
    pub fn generators(&self) -> Vec<GeneratorId> {
        let mut g = match self {
            AlgebraSpace::C4 => c4_generators(),
            AlgebraSpace::C4Calculus => c4_calculus_generators(),
            AlgebraSpace::R4 => r4_generators(),
            AlgebraSpace::R4Calculus => r4_calculus_generators(),
            AlgebraSpace::Monad(k) => monad_generators(*k),
            AlgebraSpace::MonadC4(k) => {
                let mut g = monad_generators(*k);
                g.extend(c4_generators());
                g
            }
        };
        g.sort();
        g
    }

    pub fn name(&self) -> String {
        match self {
            AlgebraSpace::C4 => "C4".into(),
            AlgebraSpace::C4Calculus => "Omega(C4)".into(),
            AlgebraSpace::R4 => "R4".into(),
            AlgebraSpace::R4Calculus => "Omega(R4)".into(),
            AlgebraSpace::Monad(k) => format!("M_{k}"),
            AlgebraSpace::MonadC4(k) => format!("M_{k} (x) C4"),
        }
    }

    pub fn parse(s: &str, k: usize) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c4" => Some(AlgebraSpace::C4),
            "c4-calculus" | "omega-c4" => Some(AlgebraSpace::C4Calculus),
            "r4" => Some(AlgebraSpace::R4),
            "r4-calculus" | "omega-r4" => Some(AlgebraSpace::R4Calculus),
            "monad" => Some(AlgebraSpace::Monad(k)),
            "monad-c4" => Some(AlgebraSpace::MonadC4(k)),
            _ => None,
        }
    }
}

/// One term `h ⊗ c·g` of a coaction; `image = None` stands for the unit.
#[derive(Clone, Debug, PartialEq)]
pub struct CoactionTerm {
    pub hopf: HopfMonomial,
    pub coeff: Coefficient,
    pub image: Option<GeneratorId>,
}

fn term(hopf: HopfMonomial, c: f64, image: Option<GeneratorId>) -> CoactionTerm {
    CoactionTerm { hopf, coeff: Coefficient::real(c), image }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

fn cpow(c: Coefficient, n: u32) -> Coefficient {
    (0..n).fold(Coefficient::one(), |acc, _| acc * c)
}

impl TwistModel {
    pub fn moyal(hbar: f64, alpha: f64, beta: f64) -> Self {
        TwistModel::Moyal { hbar, alpha, beta }
    }

    pub fn toric(theta: f64) -> Self {
        TwistModel::Toric { theta }
    }

    pub fn from_json(s: &str) -> Result<Self, TwistError> {
        let m: TwistModel = serde_json::from_str(s)
            .map_err(|e| TwistError::InvalidParameters(e.to_string()))?;
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), TwistError> {
        match *self {
            TwistModel::Classical => Ok(()),
            TwistModel::Moyal { hbar, alpha, beta } => {
                if !(hbar.is_finite() && hbar >= 0.0) {
                    return Err(TwistError::InvalidParameters("hbar must be >= 0".into()));
                }
                if alpha == 0.0 || beta == 0.0 || !alpha.is_finite() || !beta.is_finite() {
                    return Err(TwistError::InvalidParameters("alpha, beta must be nonzero".into()));
                }
                if (alpha + beta).abs() < 1e-15 {
                    return Err(TwistError::InvalidParameters("alpha + beta must be nonzero".into()));
                }
                Ok(())
            }
            TwistModel::Toric { theta } => {
                if !(0.0..1.0).contains(&theta) {
                    return Err(TwistError::InvalidParameters("theta must lie in [0, 1)".into()));
                }
                Ok(())
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TwistModel::Classical => "classical",
            TwistModel::Moyal { .. } => "moyal",
            TwistModel::Toric { .. } => "toric",
        }
    }

    /// True when the cocycle is ε⊗ε.
    pub fn is_trivial(&self) -> bool {
        match *self {
            TwistModel::Classical => true,
            TwistModel::Moyal { hbar, .. } => hbar == 0.0,
            TwistModel::Toric { theta } => theta == 0.0,
        }
    }

    pub fn is_torus(&self) -> bool {
        matches!(self, TwistModel::Toric { .. })
    }

    pub fn hopf_unit(&self) -> HopfMonomial {
        if self.is_torus() {
            HopfMonomial::TORUS_ONE
        } else {
            HopfMonomial::TRANS_ONE
        }
    }

    pub fn hopf_generators(&self) -> Vec<GeneratorId> {
        if self.is_torus() {
            torus_generators()
        } else {
            trans_generators()
        }
    }

    /// Real deformation level ζ = ħ(α+β) entering the real ADHM equation.
    pub fn zeta(&self) -> f64 {
        match *self {
            TwistModel::Moyal { hbar, alpha, beta } => hbar * (alpha + beta),
            _ => 0.0,
        }
    }

    /// μ = e^{iπθ}; 1 outside the toric model.
    pub fn mu(&self) -> Complex64 {
        match *self {
            TwistModel::Toric { theta } => Complex64::from_polar(1.0, std::f64::consts::PI * theta),
            _ => Complex64::new(1.0, 0.0),
        }
    }

    /// Numeric value substituted for the formal ħ. The formal ħ is imaginary
    /// under *, so it is replaced by i·ħ.
    pub fn hbar_value(&self) -> Complex64 {
        match *self {
            TwistModel::Moyal { hbar, .. } => Complex64::new(0.0, hbar),
            _ => Complex64::new(0.0, 0.0),
        }
    }

    /// Numeric value of μ^{1/2}.
    pub fn half_mu_value(&self) -> Complex64 {
        match *self {
            TwistModel::Toric { theta } => {
                Complex64::from_polar(1.0, std::f64::consts::PI * theta / 2.0)
            }
            _ => Complex64::new(1.0, 0.0),
        }
    }

    pub fn specialize(&self, p: &NCPolynomial) -> NCPolynomial {
        p.specialize(self.hbar_value(), self.half_mu_value())
    }

    /// F(t₁*, t₁) and F(t₂*, t₂); zero when the twist is trivial.
    fn moyal_pairings(&self) -> (Coefficient, Coefficient) {
        match *self {
            TwistModel::Moyal { hbar, alpha, beta } if hbar != 0.0 => (
                Coefficient::new(Complex64::new(0.0, 0.5 * alpha), 1, 0),
                Coefficient::new(Complex64::new(0.0, -0.5 * beta), 1, 0),
            ),
            _ => (Coefficient::zero(), Coefficient::zero()),
        }
    }

    fn check_kind(&self, h: &HopfMonomial) -> Result<(), TwistError> {
        match (self.is_torus(), h) {
            (true, HopfMonomial::Torus(_)) | (false, HopfMonomial::Trans(_)) => Ok(()),
            _ => Err(TwistError::ModelMismatch(format!(
                "{h:?} does not belong to the {} Hopf algebra",
                self.name()
            ))),
        }
    }

    fn cocycle_signed(
        &self,
        h: &HopfMonomial,
        g: &HopfMonomial,
        sign: f64,
    ) -> Result<Coefficient, TwistError> {
        self.check_kind(h)?;
        self.check_kind(g)?;
        match (h, g) {
            (HopfMonomial::Torus(m), HopfMonomial::Torus(n)) => {
                if self.is_trivial() {
                    return Ok(Coefficient::one());
                }
                let e = -m[0] * n[1] + m[1] * n[0];
                Ok(Coefficient::new(Complex64::new(1.0, 0.0), 0, sign as i32 * e))
            }
            (HopfMonomial::Trans(p), HopfMonomial::Trans(q)) => {
                // exp(Σ c_ab ∂_a ⊗ ∂_b) paired with h ⊗ g; only t_j*↔t_j pair.
                let (c1, c2) = self.moyal_pairings();
                let mut out = Coefficient::one();
                for (j, c) in [(1u8, c1), (2u8, c2)] {
                    let c = c.scale(Complex64::new(sign, 0.0));
                    let hs = p[slot(j, true)];
                    let hp = p[slot(j, false)];
                    if q[slot(j, false)] != hs || q[slot(j, true)] != hp {
                        return Ok(Coefficient::zero());
                    }
                    let v = cpow(c, hs) * cpow(c.scale(Complex64::new(-1.0, 0.0)), hp);
                    out = out * v.scale(Complex64::new(factorial(hs) * factorial(hp), 0.0));
                }
                Ok(out)
            }
            _ => unreachable!(),
        }
    }

    /// F(h, g): bicharacter extension of the generator values.
    pub fn cocycle_eval(&self, h: &HopfMonomial, g: &HopfMonomial) -> Result<Coefficient, TwistError> {
        self.cocycle_signed(h, g, 1.0)
    }

    /// Convolution inverse F⁻¹(h, g).
    pub fn cocycle_inverse_eval(
        &self,
        h: &HopfMonomial,
        g: &HopfMonomial,
    ) -> Result<Coefficient, TwistError> {
        self.cocycle_signed(h, g, -1.0)
    }

    /// 𝓡(h, g) = F(g₍₁₎, h₍₁₎) F⁻¹(h₍₂₎, g₍₂₎), summed over both coproducts.
    pub fn r_matrix(&self, h: &HopfMonomial, g: &HopfMonomial) -> Result<Coefficient, TwistError> {
        let mut acc = NCPolynomial::zero();
        for (ch, h1, h2) in h.coproduct() {
            for (cg, g1, g2) in g.coproduct() {
                let v = self.cocycle_eval(&g1, &h1)? * self.cocycle_inverse_eval(&h2, &g2)?;
                acc.add_term(Monomial::unit(), v.scale(Complex64::new(ch * cg, 0.0)));
            }
        }
        Ok(single_scalar(&acc))
    }

    /// Left coaction of a generator.
    pub fn coaction(&self, g: GeneratorId) -> Result<Vec<CoactionTerm>, TwistError> {
        if g.conjugated {
            let base = self.coaction(g.star())?;
            return Ok(base
                .into_iter()
                .map(|t| CoactionTerm {
                    hopf: t.hopf.star(),
                    coeff: t.coeff.conj(),
                    image: t.image.map(|i| i.star()),
                })
                .collect());
        }
        if g.grade > 0 {
            let base = GeneratorId { grade: 0, ..g };
            return Ok(self
                .coaction(base)?
                .into_iter()
                .filter_map(|t| {
                    t.image.map(|i| CoactionTerm { image: Some(GeneratorId { grade: g.grade, ..i }), ..t })
                })
                .collect());
        }
        let missing = || TwistError::MissingCoaction(g.label());
        if self.is_torus() {
            let w = match (g.space, g.index) {
                (Space::C4, j @ 1..=4) => HopfMonomial::varsigma(j),
                (Space::R4, 1) => HopfMonomial::Torus([1, -1]),
                (Space::R4, 2) => HopfMonomial::Torus([-1, -1]),
                (Space::MonadM, j @ 1..=4) => HopfMonomial::varsigma(j).star(),
                _ => return Err(missing()),
            };
            return Ok(vec![term(w, 1.0, Some(g))]);
        }
        let one = HopfMonomial::TRANS_ONE;
        let t = HopfMonomial::t;
        let with = |j: u8| GeneratorId { index: j, ..g };
        let terms = match (g.space, g.index) {
            (Space::C4, 1 | 2) => vec![term(one, 1.0, Some(g))],
            (Space::C4, 3) => vec![
                term(one, 1.0, Some(g)),
                term(t(1, true), 1.0, Some(with(1))),
                term(t(2, true), 1.0, Some(with(2))),
            ],
            (Space::C4, 4) => vec![
                term(one, 1.0, Some(g)),
                term(t(2, false), -1.0, Some(with(1))),
                term(t(1, false), 1.0, Some(with(2))),
            ],
            (Space::R4, j @ 1..=2) => vec![term(one, 1.0, Some(g)), term(t(j, false), 1.0, None)],
            (Space::MonadM, 1) => vec![
                term(one, 1.0, Some(g)),
                term(t(1, true), -1.0, Some(with(3))),
                term(t(2, false), 1.0, Some(with(4))),
            ],
            (Space::MonadM, 2) => vec![
                term(one, 1.0, Some(g)),
                term(t(2, true), -1.0, Some(with(3))),
                term(t(1, false), -1.0, Some(with(4))),
            ],
            (Space::MonadM, 3 | 4) => vec![term(one, 1.0, Some(g))],
            _ => return Err(missing()),
        };
        Ok(terms)
    }

    /// Coaction of a word, as (Hopf part, coefficient, word).
    pub fn coaction_word(
        &self,
        word: &[GeneratorId],
    ) -> Result<Vec<(HopfMonomial, Coefficient, Vec<GeneratorId>)>, TwistError> {
        let mut acc = vec![(self.hopf_unit(), Coefficient::one(), Vec::new())];
        for g in word {
            let co = self.coaction(*g)?;
            let mut next = Vec::with_capacity(acc.len() * co.len());
            for (h, c, w) in &acc {
                for t in &co {
                    let mut w2 = w.clone();
                    if let Some(i) = t.image {
                        w2.push(i);
                    }
                    next.push((h.mul(&t.hopf)?, *c * t.coeff, w2));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Coaction of a polynomial as an element of H ⊗ A, written as words whose
    /// Hopf letters come first.
    pub fn coaction_poly(&self, p: &NCPolynomial) -> Result<NCPolynomial, TwistError> {
        let mut out = NCPolynomial::zero();
        for (m, c) in p.terms() {
            for (h, c2, w) in self.coaction_word(&m.word)? {
                let mut word = h.to_word();
                word.extend(w);
                out.add_term(Monomial::new(word), c * c2);
            }
        }
        Ok(out)
    }

    /// Filtration weight: highest Hopf degree appearing in the coaction.
    /// Twisting corrections strictly lower the total weight.
    pub fn weight(&self, g: GeneratorId) -> u32 {
        self.coaction(g)
            .map(|ts| ts.iter().map(|t| t.hopf.degree()).max().unwrap_or(0))
            .unwrap_or(0)
    }

    /// Canonical left action h ▷ v = 𝓡(v⁽⁻¹⁾, h) v⁽⁰⁾ on a generator.
    pub fn act(&self, h: &HopfMonomial, v: GeneratorId) -> Result<NCPolynomial, TwistError> {
        let mut out = NCPolynomial::zero();
        for t in self.coaction(v)? {
            let r = self.r_matrix(&t.hopf, h)?;
            let word = t.image.map(|i| vec![i]).unwrap_or_default();
            out.add_term(Monomial::new(word), r * t.coeff);
        }
        Ok(out)
    }
}

/// Collapses a constant polynomial that is homogeneous in the formal
/// parameters to a single coefficient.
pub(crate) fn single_scalar(p: &NCPolynomial) -> Coefficient {
    let mut it = p.terms();
    match it.next() {
        None => Coefficient::zero(),
        Some((_, c)) => {
            debug_assert!(it.next().is_none(), "inhomogeneous scalar {p:?}");
            c
        }
    }
}
