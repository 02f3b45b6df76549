//! Bosonisation M ⊗ Z ↦ M ⊗ Z⁽⁻¹⁾ ⊗ Z⁽⁰⁾ of the monad maps.
//!
//! Entries of the bosonised matrices are words `h z` in H ⊗ C⁴_F with the
//! Hopf letters first; the two tensor factors commute.

use crate::error::MonadError;
use crate::matrix::PolyMatrix;
use crate::monad::MonadMatrices;
use hopf_twist::{derive_relations, hopf_relations, AlgebraSpace, HopfMonomial, TwistModel};
use star_algebra::generator::c4_generators;
use star_algebra::{Coefficient, Complex64, GeneratorId, NCPolynomial, RelationSystem, Report};

/// H ⊗ C⁴_F: the twisted C⁴ relations, the Hopf relations, and Hopf letters
/// commuting with coordinates.
pub fn bosonic_ambient(model: &TwistModel) -> Result<RelationSystem, MonadError> {
    let c4 = derive_relations(model, AlgebraSpace::C4)?;
    let mut sys = c4.merged(&hopf_relations(model), format!("H (x) C4 [{}]", model.name()));
    for x in model.hopf_generators() {
        for z in c4_generators() {
            sys.set_rule(z, x, NCPolynomial::word(vec![x, z]));
        }
    }
    Ok(sys)
}

/// Coaction of a polynomial in C⁴, written in H ⊗ C⁴.
pub fn bosonise_poly(model: &TwistModel, p: &NCPolynomial) -> Result<NCPolynomial, MonadError> {
    Ok(model.coaction_poly(p)?)
}

/// σ̃_z and τ̃_z.
#[derive(Clone, Debug)]
pub struct BosonisedMonad {
    pub sigma: PolyMatrix,
    pub tau: PolyMatrix,
}

fn bosonise_matrix(model: &TwistModel, p: &PolyMatrix) -> Result<PolyMatrix, MonadError> {
    let mut out = PolyMatrix::zeros(p.rows, p.cols);
    for r in 0..p.rows {
        for c in 0..p.cols {
            out.set(r, c, bosonise_poly(model, p.get(r, c))?);
        }
    }
    Ok(out)
}

/// σ̃_z = Σ_r M^r ⊗ z_r⁽⁻¹⁾ ⊗ z_r⁽⁰⁾ and τ̃_z likewise, taking the matrices of
/// `m` as the coefficients M^r, N^r.
pub fn bosonise_monad(m: &MonadMatrices, model: &TwistModel) -> Result<BosonisedMonad, MonadError> {
    Ok(BosonisedMonad {
        sigma: bosonise_matrix(model, &m.sigma_z())?,
        tau: bosonise_matrix(model, &m.tau_z())?,
    })
}

/// M^r written in the tilde generators: a list of (s, c, h) with
/// M^r = Σ c M̃^s ⊗ h.
pub fn untilde(model: &TwistModel, r: usize) -> Vec<(usize, Coefficient, HopfMonomial)> {
    let one = model.hopf_unit();
    let half = |x: f64| Coefficient::real(0.5 * x);
    match model {
        TwistModel::Moyal { .. } => match r {
            1 => vec![
                (1, Coefficient::one(), one),
                (3, half(-1.0), HopfMonomial::t(1, true)),
                (4, half(1.0), HopfMonomial::t(2, false)),
            ],
            2 => vec![
                (2, Coefficient::one(), one),
                (3, half(-1.0), HopfMonomial::t(2, true)),
                (4, half(-1.0), HopfMonomial::t(1, false)),
            ],
            _ => vec![(r, Coefficient::one(), one)],
        },
        TwistModel::Toric { .. } => match r {
            1 => vec![(1, Coefficient::one(), HopfMonomial::varsigma(2))],
            2 => vec![(2, Coefficient::one(), HopfMonomial::varsigma(1))],
            _ => vec![(r, Coefficient::one(), one)],
        },
        TwistModel::Classical => vec![(r, Coefficient::one(), one)],
    }
}

/// Σ_r M^r ⊗ w_r⁽⁻¹⁾ ⊗ w_r⁽⁰⁾ for signed letters w_r, with M^r expressed in the
/// tilde matrices of `m` (their values are the classical parameters).
fn tilde_linear(
    m: &MonadMatrices,
    model: &TwistModel,
    letters: [(f64, GeneratorId); 4],
) -> Result<PolyMatrix, MonadError> {
    let mut acc = PolyMatrix::zeros(m.m[0].rows, m.m[0].cols);
    for (r, (sign, w)) in letters.iter().enumerate() {
        let co = bosonise_poly(model, &NCPolynomial::generator(*w))?;
        for (s, c, h) in untilde(model, r + 1) {
            let factor = NCPolynomial::term(h.to_word(), c.scale(Complex64::new(*sign, 0.0)));
            let term = m.m[s - 1].times_poly(&factor.concat_mul(&co));
            acc = acc.add(&term)?;
        }
    }
    Ok(acc)
}

/// σ̃_z and σ̃_{J(z)} in H ⊗ C⁴_F for a monad whose matrices are the tilde
/// (classical) parameters, as produced by `build_monad`.
pub fn tilde_sigma(m: &MonadMatrices, model: &TwistModel) -> Result<(PolyMatrix, PolyMatrix), MonadError> {
    let z = GeneratorId::z;
    let zs = |j| GeneratorId::z(j).star();
    let sigma = tilde_linear(m, model, [(1.0, z(1)), (1.0, z(2)), (1.0, z(3)), (1.0, z(4))])?;
    let sigma_j = tilde_linear(m, model, [(-1.0, zs(2)), (1.0, zs(1)), (-1.0, zs(4)), (1.0, zs(3))])?;
    let amb = bosonic_ambient(model)?;
    Ok((sigma.normal_form(&amb)?, sigma_j.normal_form(&amb)?))
}

/// μ(ab) = μ(a)μ(b) on all pairs of C⁴ generators.
pub fn bosonisation_report(model: &TwistModel) -> Result<Report, MonadError> {
    let c4 = derive_relations(model, AlgebraSpace::C4)?;
    let amb = bosonic_ambient(model)?;
    let gens = c4_generators();
    let mut worst: f64 = 0.0;
    for &a in &gens {
        for &b in &gens {
            let ab = c4.normal_form(&NCPolynomial::word(vec![a, b]))?;
            let lhs = amb.normal_form(&bosonise_poly(model, &ab)?)?;
            let rhs = amb.multiply(
                &bosonise_poly(model, &NCPolynomial::generator(a))?,
                &bosonise_poly(model, &NCPolynomial::generator(b))?,
            )?;
            worst = worst.max(lhs.sub(&rhs).max_abs());
        }
    }
    let mut rep = Report::new();
    rep.record(format!("bosonisation_multiplicative_{}", model.name()), worst, 1e-12);
    Ok(rep)
}
