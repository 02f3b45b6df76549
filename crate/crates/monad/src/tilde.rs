//! The tilde generators M̃ inside the smash product M_F ⋊ H.
//!
//! They commute among themselves (so any classical values may be assigned to
//! them) and the Hopf letters act on them through ▷'.

use crate::error::MonadError;
use hopf_twist::{smash_relations, AlgebraSpace, HopfMonomial, TwistModel};
use star_algebra::{Coefficient, Complex64, GeneratorId, NCPolynomial, RelationSystem, Report};

/// μ exponents (half units) of ς_l M̃^j = μ^{η_lj} M̃^j ς_l.
pub const TORIC_ETA: [[i32; 4]; 4] = [[0, 0, 2, -2], [0, 0, -2, 2], [-2, 2, 0, 0], [2, -2, 0, 0]];

fn letter(g: GeneratorId) -> NCPolynomial {
    NCPolynomial::generator(g)
}

fn hopf_letter(h: HopfMonomial) -> NCPolynomial {
    NCPolynomial::word(h.to_word())
}

/// M̃^j_{r,c} as an element of the smash product (monad letters on the left).
pub fn tilde_element(model: &TwistModel, j: u8, r: u8, c: u8) -> NCPolynomial {
    let m = |i: u8| letter(GeneratorId::m(i, r, c));
    let t = HopfMonomial::t;
    match (model, j) {
        (TwistModel::Moyal { .. }, 1) => m(1)
            .add(&m(3).concat_mul(&hopf_letter(t(1, true))).scale(0.5))
            .sub(&m(4).concat_mul(&hopf_letter(t(2, false))).scale(0.5)),
        (TwistModel::Moyal { .. }, 2) => m(2)
            .add(&m(3).concat_mul(&hopf_letter(t(2, true))).scale(0.5))
            .add(&m(4).concat_mul(&hopf_letter(t(1, false))).scale(0.5)),
        (TwistModel::Toric { .. }, 1 | 2) => m(j).concat_mul(&hopf_letter(HopfMonomial::varsigma(j))),
        _ => m(j),
    }
}

/// x ▷' M̃^j for a translation letter: (coefficient of iħ, target index).
fn moyal_action(alpha: f64, beta: f64, x: GeneratorId, j: u8, conj: bool) -> Option<(f64, u8)> {
    let key = (x.index, x.conjugated, j, conj);
    match key {
        (1, false, 1, false) => Some((alpha, 3)),
        (1, true, 1, true) => Some((-alpha, 3)),
        (1, true, 2, false) => Some((-alpha, 4)),
        (1, false, 2, true) => Some((alpha, 4)),
        (2, true, 1, false) => Some((-beta, 4)),
        (2, false, 1, true) => Some((beta, 4)),
        (2, false, 2, false) => Some((-beta, 3)),
        (2, true, 2, true) => Some((beta, 3)),
        _ => None,
    }
}

struct Tilde {
    j: u8,
    r: u8,
    conj: bool,
    poly: NCPolynomial,
}

fn tilde_elements(model: &TwistModel, sys: &RelationSystem) -> Result<Vec<Tilde>, MonadError> {
    let mut out = Vec::new();
    for j in 1..=4u8 {
        for r in 0..4u8 {
            let p = sys.normal_form(&tilde_element(model, j, r, 0))?;
            out.push(Tilde { j, r, conj: true, poly: sys.adjoint(&p)? });
            out.push(Tilde { j, r, conj: false, poly: p });
        }
    }
    Ok(out)
}

fn find<'a>(all: &'a [Tilde], j: u8, r: u8, conj: bool) -> &'a NCPolynomial {
    &all.iter().find(|t| t.j == j && t.r == r && t.conj == conj).expect("tilde element").poly
}

/// For k = 1: the 32 elements M̃, M̃* commute pairwise, and every Hopf letter
/// acts on them through ▷' (Moyal) or the phases μ^{η} (toric).
pub fn tilde_subalgebra_check(model: &TwistModel) -> Result<Report, MonadError> {
    let sys = smash_relations(model, AlgebraSpace::Monad(1))?;
    let all = tilde_elements(model, &sys)?;
    let mut rep = Report::new();

    let mut worst: f64 = 0.0;
    for (n, a) in all.iter().enumerate() {
        for b in &all[n + 1..] {
            let ab = sys.multiply(&a.poly, &b.poly)?;
            let ba = sys.multiply(&b.poly, &a.poly)?;
            worst = worst.max(ab.sub(&ba).max_abs());
        }
    }
    rep.record(format!("tilde_commutative_{}", model.name()), worst, 1e-12);

    let mut worst: f64 = 0.0;
    for x in model.hopf_generators() {
        let xp = letter(x);
        for t in &all {
            let defect = match *model {
                TwistModel::Toric { .. } => {
                    let l = x.index as usize - 1;
                    let j = t.j as usize - 1;
                    let eta = if t.conj { TORIC_ETA[j][l] } else { TORIC_ETA[l][j] };
                    let phase = Coefficient::new(Complex64::new(1.0, 0.0), 0, eta);
                    let lhs = sys.multiply(&xp, &t.poly)?;
                    let rhs = sys.multiply(&t.poly, &xp)?.scale(phase);
                    lhs.sub(&rhs)
                }
                TwistModel::Moyal { alpha, beta, hbar } => {
                    let comm = sys.multiply(&xp, &t.poly)?.sub(&sys.multiply(&t.poly, &xp)?);
                    match moyal_action(alpha, beta, x, t.j, t.conj) {
                        Some((c, target)) if hbar != 0.0 => {
                            let expected = find(&all, target, t.r, t.conj)
                                .scale(Coefficient::new(Complex64::new(0.0, c), 1, 0));
                            comm.sub(&expected)
                        }
                        _ => comm,
                    }
                }
                TwistModel::Classical => sys.multiply(&xp, &t.poly)?.sub(&sys.multiply(&t.poly, &xp)?),
            };
            worst = worst.max(defect.max_abs());
        }
    }
    rep.record(format!("tilde_hopf_action_{}", model.name()), worst, 1e-12);
    Ok(rep)
}
