//! Canonical self-conjugate monads and the deformed monad condition τ_z σ_z = 0.

use crate::data::{dagger, ADHMData, CMatrix};
use crate::error::MonadError;
use crate::matrix::PolyMatrix;
use hopf_twist::{derive_relations, AlgebraSpace, TwistModel};
use star_algebra::{Coefficient, Complex64, GeneratorId, NCPolynomial, RelationSystem};

/// σ_z = Σ M^j z_j : 𝓗⊗A → 𝓚⊗A and τ_z = Σ N^j z_j : 𝓚⊗A → 𝓛⊗A with
/// dim 𝓗 = dim 𝓛 = k and dim 𝓚 = 2k+2. Entries are constants that may carry
/// formal μ powers (toric model).
#[derive(Clone, Debug, PartialEq)]
pub struct MonadMatrices {
    pub k: usize,
    pub model: TwistModel,
    /// M¹..M⁴, each (2k+2)×k.
    pub m: [PolyMatrix; 4],
    /// N¹..N⁴, each k×(2k+2).
    pub n: [PolyMatrix; 4],
    pub self_conjugate: bool,
}

fn mu_coeff(model: &TwistModel, power: i32) -> Coefficient {
    if model.is_torus() && !model.is_trivial() {
        Coefficient::new(Complex64::new(1.0, 0.0), 0, 2 * power)
    } else {
        Coefficient::one()
    }
}

fn block(m: &CMatrix, sign: f64, c: Coefficient) -> PolyMatrix {
    PolyMatrix::constant(m, c.scale(Complex64::new(sign, 0.0)))
}

/// Canonical form from the proof of the classification theorems:
/// M¹ = [B₁; B₂; J], M² = [−μ̄B₂*; μB₁*; I*], M³ = [𝟙; 0; 0], M⁴ = [0; 𝟙; 0],
/// N¹ = (−μB₂, μ̄B₁, I), N² = (−B₁*, −B₂*, −J*), N³ = (0, 𝟙, 0), N⁴ = (−𝟙, 0, 0).
/// The classical and Moyal forms are μ = 1.
pub fn build_monad(data: &ADHMData) -> Result<MonadMatrices, MonadError> {
    data.validate()?;
    let k = data.k;
    let model = data.model;
    let one = Coefficient::one();
    let (mu, mubar) = (mu_coeff(&model, 1), mu_coeff(&model, -1));
    let id = CMatrix::identity(k, k);
    let zk = CMatrix::zeros(k, k);
    let z2k = CMatrix::zeros(2, k);
    let zk2 = CMatrix::zeros(k, 2);

    let m1 = PolyMatrix::vstack(&[&block(&data.b1, 1.0, one), &block(&data.b2, 1.0, one), &block(&data.j, 1.0, one)])?;
    let m2 = PolyMatrix::vstack(&[
        &block(&dagger(&data.b2), -1.0, mubar),
        &block(&dagger(&data.b1), 1.0, mu),
        &block(&dagger(&data.i), 1.0, one),
    ])?;
    let m3 = PolyMatrix::vstack(&[&block(&id, 1.0, one), &block(&zk, 1.0, one), &block(&z2k, 1.0, one)])?;
    let m4 = PolyMatrix::vstack(&[&block(&zk, 1.0, one), &block(&id, 1.0, one), &block(&z2k, 1.0, one)])?;

    let n1 = PolyMatrix::hstack(&[&block(&data.b2, -1.0, mu), &block(&data.b1, 1.0, mubar), &block(&data.i, 1.0, one)])?;
    let n2 = PolyMatrix::hstack(&[
        &block(&dagger(&data.b1), -1.0, one),
        &block(&dagger(&data.b2), -1.0, one),
        &block(&dagger(&data.j), -1.0, one),
    ])?;
    let n3 = PolyMatrix::hstack(&[&block(&zk, 1.0, one), &block(&id, 1.0, one), &block(&zk2, 1.0, one)])?;
    let n4 = PolyMatrix::hstack(&[&block(&id, -1.0, one), &block(&zk, 1.0, one), &block(&zk2, 1.0, one)])?;

    let out = MonadMatrices { k, model, m: [m1, m2, m3, m4], n: [n1, n2, n3, n4], self_conjugate: true };
    debug_assert!(out.reality_defect() == 0.0);
    Ok(out)
}

impl MonadMatrices {
    /// Largest entry of N¹−M²†, N²+M¹†, N³−M⁴†, N⁴+M³†.
    pub fn reality_defect(&self) -> f64 {
        let adj = |j: usize| self.m[j].constant_adjoint();
        let pairs = [
            (&self.n[0], adj(1), 1.0),
            (&self.n[1], adj(0), -1.0),
            (&self.n[2], adj(3), 1.0),
            (&self.n[3], adj(2), -1.0),
        ];
        pairs
            .iter()
            .map(|(n, a, s)| n.sub(&a.scale(*s)).map(|d| d.max_abs()).unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    /// Σ_j A^j z_j for a list of four coefficient matrices and letters.
    fn linear(mats: &[PolyMatrix; 4], letters: [(f64, GeneratorId); 4], which: [usize; 4]) -> PolyMatrix {
        let mut acc = PolyMatrix::zeros(mats[0].rows, mats[0].cols);
        for (slot, (sign, g)) in which.iter().zip(letters) {
            let term = mats[*slot].times_poly(&NCPolynomial::generator(g)).scale(sign);
            acc = acc.add(&term).expect("same shape");
        }
        acc
    }

    pub fn sigma_z(&self) -> PolyMatrix {
        let z = GeneratorId::z;
        Self::linear(&self.m, [(1.0, z(1)), (1.0, z(2)), (1.0, z(3)), (1.0, z(4))], [0, 1, 2, 3])
    }

    pub fn tau_z(&self) -> PolyMatrix {
        let z = GeneratorId::z;
        Self::linear(&self.n, [(1.0, z(1)), (1.0, z(2)), (1.0, z(3)), (1.0, z(4))], [0, 1, 2, 3])
    }

    /// σ_{J(z)} = −M¹z₂* + M²z₁* − M³z₄* + M⁴z₃*.
    pub fn sigma_jz(&self) -> PolyMatrix {
        let zs = |j| GeneratorId::z(j).star();
        Self::linear(&self.m, [(-1.0, zs(2)), (1.0, zs(1)), (-1.0, zs(4)), (1.0, zs(3))], [0, 1, 2, 3])
    }

    /// Numeric M^j and N^j after specialising μ.
    pub fn numeric(&self) -> Result<([CMatrix; 4], [CMatrix; 4]), MonadError> {
        let (h, hm) = (self.model.hbar_value(), self.model.half_mu_value());
        let conv = |p: &PolyMatrix| p.to_numeric(h, hm);
        Ok((
            [conv(&self.m[0])?, conv(&self.m[1])?, conv(&self.m[2])?, conv(&self.m[3])?],
            [conv(&self.n[0])?, conv(&self.n[1])?, conv(&self.n[2])?, conv(&self.n[3])?],
        ))
    }
}

/// Twisted C⁴ relations of a model.
pub fn c4_relations(model: &TwistModel) -> Result<RelationSystem, MonadError> {
    Ok(derive_relations(model, AlgebraSpace::C4)?)
}

/// Normal form of τ_z σ_z in the twisted C⁴ of `model`. The k×k entries are
/// quadratic in z; each coefficient is the corresponding deformed ADHM
/// expression. For Moyal the reordering z₄z₃ → z₃z₄ − iħ(α+β)z₁z₂ produces the
/// constant shift on the z₁z₂ coefficient.
pub fn monad_residual(m: &MonadMatrices, model: &TwistModel) -> Result<PolyMatrix, MonadError> {
    if m.model.name() != model.name() {
        return Err(MonadError::ModelMismatch(format!(
            "monad built for {} evaluated in {}",
            m.model.name(),
            model.name()
        )));
    }
    let sys = c4_relations(model)?;
    m.tau_z().mul_in(&m.sigma_z(), &sys)
}

/// Largest coefficient of a residual after specialising ħ and μ.
pub fn residual_norm(res: &PolyMatrix, model: &TwistModel) -> f64 {
    res.map(|p| model.specialize(p)).max_abs()
}

/// Coefficient of the word z_a z_b (a ≤ b) in every entry of a residual,
/// specialised to numbers.
pub fn residual_coefficient(res: &PolyMatrix, model: &TwistModel, a: u8, b: u8) -> CMatrix {
    let w = [GeneratorId::z(a), GeneratorId::z(b)];
    CMatrix::from_fn(res.rows, res.cols, |r, c| {
        model.specialize(res.get(r, c)).coefficient(&w, 0, 0)
    })
}
