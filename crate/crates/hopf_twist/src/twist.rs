//! Cocycle twisting of commutative comodule algebras, and smash products.
//!
//! The twisted product is a ⋆ b = F(a⁽⁻¹⁾, b⁽⁻¹⁾) a⁽⁰⁾ b⁽⁰⁾, computed in the
//! classical graded-commutative algebra. Relations of the twisted algebra are
//! then read off by re-expanding g ⋆ h in ordered star-words.

use crate::error::TwistError;
use crate::hopf::HopfMonomial;
use crate::model::{AlgebraSpace, TwistModel};
use num_complex::Complex64;
use star_algebra::{Coefficient, GeneratorId, Monomial, NCPolynomial, RelationSystem, Space};

/// Above this many generators the confluence check only looks at a sample.
const FULL_CONFLUENCE_LIMIT: usize = 40;

/// Twisted product of two classical polynomials.
pub fn twist_product(
    model: &TwistModel,
    a: &NCPolynomial,
    b: &NCPolynomial,
) -> Result<NCPolynomial, TwistError> {
    let mut out = NCPolynomial::zero();
    for (ma, ca) in a.terms() {
        let co_a = model.coaction_word(&ma.word)?;
        for (mb, cb) in b.terms() {
            let co_b = model.coaction_word(&mb.word)?;
            for (ha, c1, wa) in &co_a {
                for (hb, c2, wb) in &co_b {
                    let f = model.cocycle_eval(ha, hb)?;
                    if f.is_zero() {
                        continue;
                    }
                    let mut w = wa.clone();
                    w.extend_from_slice(wb);
                    out.add_term(Monomial::new(w), ca * cb * *c1 * *c2 * f);
                }
            }
        }
    }
    Ok(out.graded_sort())
}

/// w₁ ⋆ (w₂ ⋆ (… ⋆ wₙ)) as a classical polynomial.
pub fn star_fold(model: &TwistModel, word: &[GeneratorId]) -> Result<NCPolynomial, TwistError> {
    let mut acc = NCPolynomial::one();
    for g in word.iter().rev() {
        acc = twist_product(model, &NCPolynomial::generator(*g), &acc)?;
    }
    Ok(acc)
}

fn measure(model: &TwistModel, m: &Monomial) -> (usize, u32, Vec<GeneratorId>) {
    let w: u32 = m.word.iter().map(|g| model.weight(*g)).sum();
    (m.degree(), w, m.word.clone())
}

/// Rewrites a classical polynomial as a combination of ordered star-words,
/// i.e. of normal words of the twisted algebra.
pub fn classical_to_star(model: &TwistModel, p: &NCPolynomial) -> Result<NCPolynomial, TwistError> {
    let mut rest = p.graded_sort();
    let mut out = NCPolynomial::zero();
    let mut guard = 0usize;
    while let Some((m, c)) = rest
        .terms()
        .max_by(|x, y| measure(model, x.0).cmp(&measure(model, y.0)))
        .map(|(m, c)| (m.clone(), c))
    {
        guard += 1;
        if guard > 100_000 {
            return Err(TwistError::NonConfluent("star re-expansion did not terminate".into()));
        }
        let fold = star_fold(model, &m.word)?;
        let lead = fold
            .terms()
            .find(|(fm, fc)| fm.word == m.word && fc.hbar_power == 0)
            .map(|(_, fc)| fc)
            .and_then(Coefficient::inv)
            .ok_or_else(|| {
                TwistError::NonConfluent(format!("no invertible leading term for {:?}", m.labels()))
            })?;
        let q = c * lead;
        out.add_term(m.clone(), q);
        rest = rest.sub(&fold.scale(q));
    }
    Ok(out)
}

/// Rewrite rules g·h → g ⋆ h (in normal words) for the twisted version of
/// a commutative space.
pub fn derive_relations(
    model: &TwistModel,
    space: AlgebraSpace,
) -> Result<RelationSystem, TwistError> {
    model.validate()?;
    let gens = space.generators();
    let mut sys = RelationSystem::new(format!("{} [{}]", space.name(), model.name()), gens.clone());
    for &g in &gens {
        for &h in &gens {
            if g < h || (g == h && !g.is_odd()) {
                continue;
            }
            let prod = twist_product(model, &NCPolynomial::generator(g), &NCPolynomial::generator(h))?;
            sys.set_rule(g, h, classical_to_star(model, &prod)?);
        }
        sys.set_weight(g, model.weight(g));
    }
    validate_system(&sys, &gens)?;
    Ok(sys)
}

/// Letters used for the confluence spot check on large systems: everything
/// outside the monad block plus its first row and column.
fn confluence_sample(gens: &[GeneratorId]) -> Vec<GeneratorId> {
    gens.iter()
        .copied()
        .filter(|g| g.space != Space::MonadM || (g.row == 0 && g.col == 0) || (g.row == 1 && g.col == 0))
        .collect()
}

pub(crate) fn validate_system(sys: &RelationSystem, gens: &[GeneratorId]) -> Result<(), TwistError> {
    let bad = sys.check_termination();
    if !bad.is_empty() {
        return Err(TwistError::NonConfluent(format!("rules do not terminate: {}", bad.join(", "))));
    }
    let bad = sys.check_star_closure()?;
    if !bad.is_empty() {
        return Err(TwistError::NonConfluent(format!("not closed under *: {}", bad.join(", "))));
    }
    let sample;
    let letters = if gens.len() > FULL_CONFLUENCE_LIMIT {
        sample = confluence_sample(gens);
        Some(sample.as_slice())
    } else {
        None
    };
    let bad = sys.check_confluence(letters)?;
    if !bad.is_empty() {
        return Err(TwistError::NonConfluent(format!("critical pairs fail: {}", bad.join(", "))));
    }
    Ok(())
}

/// Relations of the (commutative, untwisted) symmetry Hopf algebra.
pub fn hopf_relations(model: &TwistModel) -> RelationSystem {
    let gens = model.hopf_generators();
    let mut sys = RelationSystem::new(format!("H [{}]", model.name()), gens.clone());
    if model.is_torus() {
        let s = GeneratorId::varsigma;
        for (a, b) in [(1, 2), (3, 4)] {
            sys.set_rule(s(a), s(b), NCPolynomial::one());
            sys.set_rule(s(b), s(a), NCPolynomial::one());
            sys.set_star(s(a), s(b));
        }
    }
    sys.add_commutation_rules();
    sys
}

/// Antipode on a monomial: S(t) = −t, S(s) = s⁻¹.
pub fn antipode(h: &HopfMonomial) -> (f64, HopfMonomial) {
    match h {
        HopfMonomial::Trans(_) => (if h.degree() % 2 == 1 { -1.0 } else { 1.0 }, *h),
        HopfMonomial::Torus(m) => (1.0, HopfMonomial::Torus([-m[0], -m[1]])),
    }
}

/// Adds the cross relations of A ⋊ H to a system holding A and H.
///
/// For algebra letters a below the Hopf letters (the monad block) the Hopf
/// letter moves right; for coordinate letters it moves left.
pub fn add_smash_rules(
    sys: &mut RelationSystem,
    model: &TwistModel,
    algebra: &[GeneratorId],
) -> Result<(), TwistError> {
    for x in model.hopf_generators() {
        let h = HopfMonomial::from_generator(x).expect("hopf letter");
        for &a in algebra {
            let act = model.act(&h, a)?;
            if model.is_torus() {
                // group-like: x a = (x ▷ a) x, and x ▷ a is a multiple of a
                let phase = act.coefficients_of(&[a]).into_iter().next().unwrap_or(Coefficient::one());
                if a < x {
                    sys.set_rule(x, a, NCPolynomial::term(vec![a, x], phase));
                } else {
                    let inv = phase.inv().ok_or_else(|| {
                        TwistError::ModelMismatch(format!("non-invertible phase for {a}"))
                    })?;
                    sys.set_rule(a, x, NCPolynomial::term(vec![x, a], inv));
                }
            } else if a < x {
                let rhs = NCPolynomial::word(vec![a, x]).add(&act);
                sys.set_rule(x, a, rhs);
            } else {
                let rhs = NCPolynomial::word(vec![x, a]).sub(&act);
                sys.set_rule(a, x, rhs);
            }
        }
    }
    Ok(())
}

/// Relations of the smash product A_F ⋊ H.
pub fn smash_relations(
    model: &TwistModel,
    space: AlgebraSpace,
) -> Result<RelationSystem, TwistError> {
    let alg = derive_relations(model, space)?;
    let hopf = hopf_relations(model);
    let mut sys = alg.merged(&hopf, format!("{} # H [{}]", space.name(), model.name()));
    let gens = space.generators();
    add_smash_rules(&mut sys, model, &gens)?;
    let mut all = gens;
    all.extend(model.hopf_generators());
    all.sort();
    validate_system(&sys, &all)?;
    Ok(sys)
}

/// Crossed-module defect of (h, v): the coaction of h ▷ v against
/// h₍₁₎ v⁽⁻¹⁾ S(h₍₃₎) ⊗ h₍₂₎ ▷ v⁽⁰⁾, both as words in H ⊗ V.
pub fn crossed_module_defect(
    model: &TwistModel,
    h: &HopfMonomial,
    v: GeneratorId,
) -> Result<NCPolynomial, TwistError> {
    let lhs = model.coaction_poly(&model.act(h, v)?)?;
    let mut rhs = NCPolynomial::zero();
    for (c, parts) in h.coproduct_n(3) {
        for t in model.coaction(v)? {
            let (sgn, s3) = antipode(&parts[2]);
            let hp = parts[0].mul(&t.hopf)?.mul(&s3)?;
            let Some(img) = t.image else {
                // constant images carry h ▷ 1 = ε(h)
                let e = parts[1].counit();
                if e != 0.0 {
                    rhs.add_term(Monomial::new(hp.to_word()), t.coeff.scale(Complex64::new(c * sgn * e, 0.0)));
                }
                continue;
            };
            let acted = model.act(&parts[1], img)?;
            for (m, ac) in acted.terms() {
                let mut w = hp.to_word();
                w.extend_from_slice(&m.word);
                rhs.add_term(Monomial::new(w), (t.coeff * ac).scale(Complex64::new(c * sgn, 0.0)));
            }
        }
    }
    Ok(lhs.sub(&rhs))
}

/// Hopf monomials of total degree ≤ `max_deg` (translations) or with
/// exponents in [−max_deg, max_deg] (torus).
pub fn hopf_basis(model: &TwistModel, max_deg: u32) -> Vec<HopfMonomial> {
    let mut out = Vec::new();
    if model.is_torus() {
        let r = max_deg as i32;
        for a in -r..=r {
            for b in -r..=r {
                out.push(HopfMonomial::Torus([a, b]));
            }
        }
    } else {
        for a in 0..=max_deg {
            for b in 0..=max_deg - a {
                for c in 0..=max_deg - a - b {
                    for d in 0..=max_deg - a - b - c {
                        out.push(HopfMonomial::Trans([a, b, c, d]));
                    }
                }
            }
        }
    }
    out
}

fn add_scalar(acc: &mut NCPolynomial, c: Coefficient) {
    acc.add_term(Monomial::unit(), c);
}

/// Two-cocycle defect on (x, y, z):
/// F(x₍₁₎, y₍₁₎) F(x₍₂₎y₍₂₎, z) − F(y₍₁₎, z₍₁₎) F(x, y₍₂₎z₍₂₎).
pub fn cocycle_defect(
    model: &TwistModel,
    x: &HopfMonomial,
    y: &HopfMonomial,
    z: &HopfMonomial,
) -> Result<NCPolynomial, TwistError> {
    let mut acc = NCPolynomial::zero();
    for (cx, x1, x2) in x.coproduct() {
        for (cy, y1, y2) in y.coproduct() {
            let v = model.cocycle_eval(&x1, &y1)? * model.cocycle_eval(&x2.mul(&y2)?, z)?;
            add_scalar(&mut acc, v.scale(Complex64::new(cx * cy, 0.0)));
        }
    }
    for (cy, y1, y2) in y.coproduct() {
        for (cz, z1, z2) in z.coproduct() {
            let v = model.cocycle_eval(&y1, &z1)? * model.cocycle_eval(x, &y2.mul(&z2)?)?;
            add_scalar(&mut acc, v.scale(Complex64::new(-cy * cz, 0.0)));
        }
    }
    Ok(acc)
}

/// Defect of F⁻¹ ∗ F = ε on (x, y).
pub fn convolution_inverse_defect(
    model: &TwistModel,
    x: &HopfMonomial,
    y: &HopfMonomial,
) -> Result<NCPolynomial, TwistError> {
    let mut acc = NCPolynomial::zero();
    for (cx, x1, x2) in x.coproduct() {
        for (cy, y1, y2) in y.coproduct() {
            let v = model.cocycle_inverse_eval(&x1, &y1)? * model.cocycle_eval(&x2, &y2)?;
            add_scalar(&mut acc, v.scale(Complex64::new(cx * cy, 0.0)));
        }
    }
    add_scalar(&mut acc, Coefficient::real(-x.counit() * y.counit()));
    Ok(acc)
}

/// Cotriangularity defect: Σ 𝓡(y₍₁₎, x₍₁₎) 𝓡(x₍₂₎, y₍₂₎) − ε(x)ε(y).
pub fn cotriangular_defect(
    model: &TwistModel,
    x: &HopfMonomial,
    y: &HopfMonomial,
) -> Result<NCPolynomial, TwistError> {
    let mut acc = NCPolynomial::zero();
    for (cx, x1, x2) in x.coproduct() {
        for (cy, y1, y2) in y.coproduct() {
            let v = model.r_matrix(&y1, &x1)? * model.r_matrix(&x2, &y2)?;
            add_scalar(&mut acc, v.scale(Complex64::new(cx * cy, 0.0)));
        }
    }
    add_scalar(&mut acc, Coefficient::real(-x.counit() * y.counit()));
    Ok(acc)
}

/// Bicharacter defect in the first slot: F(xy, z) − F(x, z₍₁₎) F(y, z₍₂₎).
pub fn bicharacter_defect(
    model: &TwistModel,
    x: &HopfMonomial,
    y: &HopfMonomial,
    z: &HopfMonomial,
) -> Result<NCPolynomial, TwistError> {
    let mut acc = NCPolynomial::zero();
    add_scalar(&mut acc, model.cocycle_eval(&x.mul(y)?, z)?);
    for (cz, z1, z2) in z.coproduct() {
        let v = model.cocycle_eval(x, &z1)? * model.cocycle_eval(y, &z2)?;
        add_scalar(&mut acc, v.scale(Complex64::new(-cz, 0.0)));
    }
    Ok(acc)
}
