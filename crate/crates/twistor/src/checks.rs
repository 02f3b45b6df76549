//! Embedding, localisation and trivialisation checks for the twistor fibration.

use hopf_twist::{TwistError, TwistModel};
use star_algebra::generator::{c4_generators, CP3_A, CP3_U};
use star_algebra::{GeneratorId, Monomial, NCPolynomial, Report, Space};

use crate::jmap::apply_j;
use crate::quotient::{cmul, star, QuotientContext};

/// Residuals here come from exact arithmetic on small integers.
pub const EXACT_TOL: f64 = 1e-12;

fn g(x: GeneratorId) -> NCPolynomial {
    NCPolynomial::generator(x)
}

fn one() -> NCPolynomial {
    NCPolynomial::one()
}

fn sum(ps: &[NCPolynomial]) -> NCPolynomial {
    ps.iter().fold(NCPolynomial::zero(), |acc, p| acc.add(p))
}

fn prod(ps: &[NCPolynomial]) -> NCPolynomial {
    ps.iter().fold(one(), |acc, p| cmul(&acc, p))
}

fn z(j: u8) -> NCPolynomial {
    g(GeneratorId::z(j))
}

fn zs(j: u8) -> NCPolynomial {
    g(GeneratorId::z(j).star())
}

fn x(j: u8) -> GeneratorId {
    GeneratorId::x(j)
}

fn zeta(j: u8) -> GeneratorId {
    GeneratorId::zeta(j)
}

/// (1 + x₀)⁻¹ in the localised four-sphere.
pub fn w_sphere() -> GeneratorId {
    GeneratorId::inverse(1)
}

/// (1 + |ζ|²)⁻¹ on ℝ⁴.
pub fn w_plane() -> GeneratorId {
    GeneratorId::inverse(2)
}

/// (a₁ + a₂)⁻¹, pulled back as (z₁z₁* + z₂z₂*)⁻¹.
pub fn w_twistor() -> GeneratorId {
    GeneratorId::inverse(3)
}

fn cp1(j: u8) -> GeneratorId {
    GeneratorId::new(Space::CP1, j)
}

fn zeta_norm2() -> NCPolynomial {
    sum(&[prod(&[g(zeta(1)), g(zeta(1).star())]), prod(&[g(zeta(2)), g(zeta(2).star())])])
}

/// Images of x₁, x₂, x₀ in C⁴.
pub fn sphere_inclusion(j: u8) -> NCPolynomial {
    match j {
        1 => sum(&[prod(&[z(1), zs(3)]), prod(&[zs(2), z(4)])]).scale(2.0),
        2 => sum(&[prod(&[z(2), zs(3)]), prod(&[zs(1), z(4)]).neg()]).scale(2.0),
        _ => sum(&[
            prod(&[z(1), zs(1)]),
            prod(&[z(2), zs(2)]),
            prod(&[z(3), zs(3)]).neg(),
            prod(&[z(4), zs(4)]).neg(),
        ]),
    }
}

/// The seven-sphere relation Σ z_j*z_j − 1.
pub fn s7_relation() -> NCPolynomial {
    sum(&[
        prod(&[z(1), zs(1)]),
        prod(&[z(2), zs(2)]),
        prod(&[z(3), zs(3)]),
        prod(&[z(4), zs(4)]),
        one().neg(),
    ])
}

pub fn s7() -> QuotientContext {
    QuotientContext::new("S7").with_relation(&s7_relation())
}

/// S⁷ with z₁z₁* + z₂z₂* inverted.
pub fn s7_localised() -> QuotientContext {
    let rel = cmul(&g(w_twistor()), &sum(&[prod(&[z(1), zs(1)]), prod(&[z(2), zs(2)])])).sub(&one());
    s7().with_relation(&rel)
}

fn s4_relation(x1: &NCPolynomial, x2: &NCPolynomial, x0: &NCPolynomial) -> NCPolynomial {
    sum(&[cmul(&star(x1), x1), cmul(&star(x2), x2), cmul(x0, x0), one().neg()])
}

/// The localised four-sphere A₀[S⁴].
pub fn s4_localised() -> QuotientContext {
    let rel = s4_relation(&g(x(1)), &g(x(2)), &g(x(0)));
    let inv = cmul(&g(w_sphere()), &one().add(&g(x(0)))).sub(&one());
    QuotientContext::new("A0[S4]").with_relation(&rel).with_relation(&inv)
}

/// ℝ⁴ with (1 + |ζ|²)⁻¹ adjoined.
pub fn plane() -> QuotientContext {
    let inv = cmul(&g(w_plane()), &one().add(&zeta_norm2())).sub(&one());
    QuotientContext::new("A[R4]").with_relation(&inv)
}

/// ℝ⁴ ⊗ CP¹.
pub fn plane_times_cp1() -> QuotientContext {
    let trace = sum(&[g(cp1(1)), g(cp1(2)), one().neg()]);
    let proj = prod(&[g(cp1(1)), g(cp1(2))]).sub(&prod(&[g(cp1(3)), g(cp1(3).star())]));
    plane().with_relation(&trace).with_relation(&proj)
}

/// Inverse stereographic projection A₀[S⁴] → A[ℝ⁴].
pub fn chart(letter: GeneratorId) -> NCPolynomial {
    let w = g(w_plane());
    if letter == w_sphere() {
        return one().add(&zeta_norm2()).scale(0.5);
    }
    match (letter.index, letter.conjugated) {
        (0, _) => cmul(&one().sub(&zeta_norm2()), &w),
        (j, c) => {
            let zj = if c { zeta(j).star() } else { zeta(j) };
            cmul(&g(zj), &w).scale(2.0)
        }
    }
}

/// Stereographic coordinates A[ℝ⁴] → A₀[S⁴].
pub fn chart_inverse(letter: GeneratorId) -> NCPolynomial {
    if letter == w_plane() {
        return one().add(&g(x(0))).scale(0.5);
    }
    let xj = if letter.conjugated { x(letter.index).star() } else { x(letter.index) };
    cmul(&g(xj), &g(w_sphere()))
}

/// (j, l) with q_{jl} the given CP³ letter.
pub fn q_index(letter: GeneratorId) -> (u8, u8) {
    let (j, l) = match (letter.row, letter.index) {
        (CP3_A, j) => (j, j),
        (CP3_U, j) => (1, j + 1),
        (_, 1) => (3, 4),
        (_, 2) => (2, 4),
        _ => (2, 3),
    };
    if letter.conjugated {
        (l, j)
    } else {
        (j, l)
    }
}

/// The CP³ letter equal to q_{jl}.
pub fn q_letter(j: u8, l: u8) -> GeneratorId {
    if j == l {
        return GeneratorId::a(j);
    }
    let (lo, hi, conj) = if j < l { (j, l, false) } else { (l, j, true) };
    let base = match (lo, hi) {
        (1, h) => GeneratorId::u(h - 1),
        (3, 4) => GeneratorId::v(1),
        (2, 4) => GeneratorId::v(2),
        _ => GeneratorId::v(3),
    };
    if conj {
        base.star()
    } else {
        base
    }
}

/// Pullback CP³ → S⁷, q_{jl} ↦ z_j z_l*; the twistor inverse goes to the
/// localising inverse.
pub fn twistor_inclusion(letter: GeneratorId) -> NCPolynomial {
    if letter == w_twistor() {
        return g(w_twistor());
    }
    let (j, l) = q_index(letter);
    prod(&[z(j), zs(l)])
}

/// Images of x₀, x₁, x₂ in CP³. x₀ goes to 2(a₁+a₂) − 1, the value forced
/// by 1 + x₀ = 2(a₁+a₂); the constant −2 sometimes printed here would put
/// x₀ in [−2, 0].
pub fn fibration(j: u8) -> NCPolynomial {
    let q = |a, b| g(q_letter(a, b));
    match j {
        0 => sum(&[q(1, 1), q(2, 2)]).scale(2.0).sub(&one()),
        1 => sum(&[q(1, 3), q(4, 2)]).scale(2.0),
        _ => q(2, 3).sub(&q(4, 1)).scale(2.0),
    }
}

/// ℝ⁴ ⊗ CP¹ → A₀[CP³], composed with the pullback into localised S⁷.
pub fn trivialisation(letter: GeneratorId) -> NCPolynomial {
    let w = g(w_twistor());
    let q = |a, b| prod(&[z(a), zs(b)]);
    if letter == w_plane() {
        return sum(&[q(1, 1), q(2, 2)]);
    }
    let body = match (letter.space, letter.index) {
        (Space::R4, 1) => sum(&[q(1, 3), q(4, 2)]),
        (Space::R4, _) => q(2, 3).sub(&q(4, 1)),
        (_, 1) => q(1, 1),
        (_, 2) => q(2, 2),
        _ => q(1, 2),
    };
    let img = cmul(&w, &body);
    if letter.conjugated {
        star(&img)
    } else {
        img
    }
}

/// Inverse of the trivialisation, A₀[CP³] → ℝ⁴ ⊗ CP¹: homogeneous
/// coordinates z = (z₁, z₂, ζ₁*z₁ + ζ₂*z₂, ζ₁z₂ − ζ₂z₁) with the bilinears
/// z_a z_b* (a, b ≤ 2) replaced by (1+|ζ|²)⁻¹ times the CP¹ matrix.
pub fn detrivialisation(letter: GeneratorId) -> NCPolynomial {
    if letter == w_twistor() {
        return one().add(&zeta_norm2());
    }
    let (j, l) = q_index(letter);
    let hz = |k: u8| -> NCPolynomial {
        match k {
            1 => z(1),
            2 => z(2),
            3 => sum(&[prod(&[g(zeta(1).star()), z(1)]), prod(&[g(zeta(2).star()), z(2)])]),
            _ => prod(&[g(zeta(1)), z(2)]).sub(&prod(&[g(zeta(2)), z(1)])),
        }
    };
    let raw = cmul(&hz(j), &star(&hz(l)));
    let mut out = NCPolynomial::zero();
    for (m, c) in raw.terms() {
        let (pair, rest): (Vec<GeneratorId>, Vec<GeneratorId>) =
            m.word.iter().partition(|x| x.space == Space::C4);
        let a = pair.iter().find(|x| !x.conjugated).expect("one z").index;
        let b = pair.iter().find(|x| x.conjugated).expect("one z*").index;
        let fibre = match (a, b) {
            (1, 1) => cp1(1),
            (2, 2) => cp1(2),
            (1, 2) => cp1(3),
            _ => cp1(3).star(),
        };
        let mut w = rest;
        w.push(fibre);
        w.push(w_plane());
        out.add_term(Monomial::new(w), c);
    }
    out.graded_sort()
}

fn cp3_letters() -> Vec<GeneratorId> {
    let mut out = Vec::new();
    for j in 1..=4u8 {
        for l in 1..=4u8 {
            out.push(q_letter(j, l));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn push(report: &mut Report, name: &str, residual: f64) {
    report.record(name, residual, EXACT_TOL);
}

/// Runs all fibration checks.
pub fn verify_embeddings() -> Report {
    let mut r = Report::new();
    let s7 = s7();

    // (1) the x-images satisfy the S⁴ relation on S⁷
    let rel = s4_relation(&sphere_inclusion(1), &sphere_inclusion(2), &sphere_inclusion(0));
    push(&mut r, "s4_relation_on_s7", s7.reduce(&rel).max_abs());

    // (2) the fibration images are J-fixed and agree with the sphere inclusion
    let mut fixed = 0.0f64;
    let mut agree = 0.0f64;
    let literal_x0 = sum(&[g(GeneratorId::a(1)), g(GeneratorId::a(2)), one().neg()]).scale(2.0);
    fixed = fixed.max(apply_j(&literal_x0).expect("CP3 letters").sub(&literal_x0).graded_sort().max_abs());
    for j in 0..=2 {
        let y = fibration(j);
        fixed = fixed.max(apply_j(&y).expect("CP3 letters").sub(&y).graded_sort().max_abs());
        let pulled = y.substitute(twistor_inclusion).graded_sort();
        agree = agree.max(s7.reduce(&pulled.sub(&sphere_inclusion(j))).max_abs());
    }
    push(&mut r, "fibration_images_j_fixed", fixed);
    push(&mut r, "fibration_matches_sphere_inclusion", agree);
    let mut table = 0.0f64;
    for q in cp3_letters() {
        let lhs = apply_j(&twistor_inclusion(q)).expect("C4 letters");
        let rhs = apply_j(&g(q)).expect("CP3 letters").substitute(twistor_inclusion);
        table = table.max(lhs.sub(&rhs).graded_sort().max_abs());
    }
    push(&mut r, "cp3_j_table_matches_c4", table);

    // (3) stereographic chart and its inverse
    let s4 = s4_localised();
    let pl = plane();
    let mut round = 0.0f64;
    for j in 1..=2 {
        for c in [false, true] {
            let zj = if c { zeta(j).star() } else { zeta(j) };
            let back = chart_inverse(zj).substitute(chart);
            round = round.max(pl.reduce(&back.sub(&g(zj))).max_abs());
            let xj = if c { x(j).star() } else { x(j) };
            let back = chart(xj).substitute(chart_inverse);
            round = round.max(s4.reduce(&back.sub(&g(xj))).max_abs());
        }
    }
    let back = chart(x(0)).substitute(chart_inverse);
    round = round.max(s4.reduce(&back.sub(&g(x(0)))).max_abs());
    push(&mut r, "chart_round_trip", round);
    let sphere = s4_relation(&g(x(1)), &g(x(2)), &g(x(0)));
    let inv = cmul(&g(w_sphere()), &one().add(&g(x(0)))).sub(&one());
    let mut wd = pl.reduce(&sphere.substitute(chart)).max_abs();
    wd = wd.max(pl.reduce(&inv.substitute(chart)).max_abs());
    let plane_inv = cmul(&g(w_plane()), &one().add(&zeta_norm2())).sub(&one());
    wd = wd.max(s4.reduce(&plane_inv.substitute(chart_inverse)).max_abs());
    push(&mut r, "chart_respects_relations", wd);

    // (4) localised trivialisation CP³ ≅ ℝ⁴ × CP¹
    let prod_ctx = plane_times_cp1();
    let loc = s7_localised();
    let inv_img = detrivialisation(w_twistor()).sub(&one().add(&zeta_norm2()));
    push(&mut r, "twistor_inverse_maps_to_one_plus_norm", inv_img.max_abs());
    let trace = sum(&[g(q_letter(1, 1)), g(q_letter(2, 2)), g(q_letter(3, 3)), g(q_letter(4, 4)), one().neg()]);
    push(&mut r, "trace_relation_preserved", prod_ctx.reduce(&trace.substitute(detrivialisation)).max_abs());
    let mut projd = 0.0f64;
    let q = |a, b| g(q_letter(a, b));
    for i in 1..=4u8 {
        for j in 1..=4u8 {
            let sq = sum(&(1..=4u8).map(|k| cmul(&q(i, k), &q(k, j))).collect::<Vec<_>>()).sub(&q(i, j));
            projd = projd.max(prod_ctx.reduce(&sq.substitute(detrivialisation)).max_abs());
            for k in 1..=4u8 {
                for l in 1..=4u8 {
                    let rel = cmul(&q(i, j), &q(k, l)).sub(&cmul(&q(i, l), &q(k, j)));
                    projd = projd.max(prod_ctx.reduce(&rel.substitute(detrivialisation)).max_abs());
                }
            }
        }
    }
    let locinv = cmul(&g(w_twistor()), &sum(&[q(1, 1), q(2, 2)])).sub(&one());
    projd = projd.max(prod_ctx.reduce(&locinv.substitute(detrivialisation)).max_abs());
    push(&mut r, "projector_relations_preserved", projd);

    let mut inverse = 0.0f64;
    let mut fwd_gens = vec![zeta(1), zeta(1).star(), zeta(2), zeta(2).star(), w_plane()];
    fwd_gens.extend([cp1(1), cp1(2), cp1(3), cp1(3).star()]);
    for &x in &fwd_gens {
        // ℝ⁴ ⊗ CP¹ → S⁷_loc, then back through the CP³ bilinears
        let there = trivialisation(x);
        let back = pull_to_cp3(&there).substitute(detrivialisation);
        inverse = inverse.max(prod_ctx.reduce(&back.sub(&g(x))).max_abs());
    }
    for qq in cp3_letters() {
        let there = detrivialisation(qq).substitute(trivialisation);
        inverse = inverse.max(loc.reduce(&there.sub(&twistor_inclusion(qq))).max_abs());
    }
    push(&mut r, "trivialisation_is_inverse", inverse);
    let mut resp = 0.0f64;
    let rels = [
        sum(&[g(cp1(1)), g(cp1(2)), one().neg()]),
        prod(&[g(cp1(1)), g(cp1(2))]).sub(&prod(&[g(cp1(3)), g(cp1(3).star())])),
        cmul(&g(w_plane()), &one().add(&zeta_norm2())).sub(&one()),
    ];
    for rel in &rels {
        resp = resp.max(loc.reduce(&rel.substitute(trivialisation)).max_abs());
    }
    push(&mut r, "trivialisation_respects_relations", resp);

    // J² on generators
    let mut jj = 0.0f64;
    for zg in c4_generators() {
        let p = g(zg);
        jj = jj.max(apply_j(&apply_j(&p).unwrap()).unwrap().add(&p).max_abs());
    }
    push(&mut r, "j_squared_minus_id_on_c4", jj);
    let mut jj = 0.0f64;
    for qq in cp3_letters() {
        let p = g(qq);
        jj = jj.max(apply_j(&apply_j(&p).unwrap()).unwrap().sub(&p).max_abs());
    }
    push(&mut r, "j_squared_id_on_cp3", jj);
    r
}

/// Rewrites a polynomial in z-bilinears (each term a product of z_a z_b*
/// pairs with an optional twistor inverse) back into CP³ letters.
fn pull_to_cp3(p: &NCPolynomial) -> NCPolynomial {
    let mut out = NCPolynomial::zero();
    for (m, c) in p.terms() {
        let mut plain: Vec<u8> = Vec::new();
        let mut conj: Vec<u8> = Vec::new();
        let mut w = Vec::new();
        for l in &m.word {
            match (l.space, l.conjugated) {
                (Space::C4, false) => plain.push(l.index),
                (Space::C4, true) => conj.push(l.index),
                _ => w.push(*l),
            }
        }
        assert_eq!(plain.len(), conj.len(), "not a CP3 element");
        for (a, b) in plain.iter().zip(&conj) {
            w.push(q_letter(*a, *b));
        }
        out.add_term(Monomial::new(w), c);
    }
    out.graded_sort()
}

/// Defect of Δ_L ∘ J = (id ⊗ J) ∘ Δ_L on the C⁴ generators.
pub fn j_coaction_defect(model: &TwistModel) -> Result<f64, TwistError> {
    let mut worst = 0.0f64;
    for zg in c4_generators() {
        let lhs = model.coaction_poly(&apply_j(&g(zg))?)?;
        let mut rhs = NCPolynomial::zero();
        for t in model.coaction(zg)? {
            let img = t.image.map(|i| apply_j(&g(i))).transpose()?.unwrap_or_else(one);
            let hw = NCPolynomial::term(t.hopf.to_word(), t.coeff);
            rhs = rhs.add(&hw.concat_mul(&img));
        }
        let d = model.specialize(&lhs.sub(&rhs));
        worst = worst.max(d.max_abs());
    }
    Ok(worst)
}

