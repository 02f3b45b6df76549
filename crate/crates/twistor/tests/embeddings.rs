use hopf_twist::TwistModel;
use star_algebra::{GeneratorId, NCPolynomial};
use twistor::checks::{fibration, s4_localised, s7, sphere_inclusion};
use twistor::quotient::{cmul, star};
use twistor::{apply_j, j_coaction_defect, verify_embeddings};

#[test]
fn all_fibration_checks_pass() {
    let r = verify_embeddings();
    print!("{r}");
    assert!(r.all_pass(), "failures: {:?}", r.failures());
    assert!(r.checks.len() >= 10);
}

#[test]
fn wrong_sign_in_x0_is_detected() {
    // x₀ with the z₃ sign flipped no longer lands on S⁴
    let x0 = sphere_inclusion(0).add(&cmul(
        &NCPolynomial::generator(GeneratorId::z(3)),
        &NCPolynomial::generator(GeneratorId::z(3).star()),
    ).scale(2.0));
    let x1 = sphere_inclusion(1);
    let x2 = sphere_inclusion(2);
    let rel = cmul(&star(&x1), &x1)
        .add(&cmul(&star(&x2), &x2))
        .add(&cmul(&x0, &x0))
        .sub(&NCPolynomial::one());
    assert!(!s7().is_zero(&rel));
}

#[test]
fn j_examples() {
    let z = |j| NCPolynomial::generator(GeneratorId::z(j));
    assert!(apply_j(&z(1)).unwrap().approx_eq(&NCPolynomial::generator(GeneratorId::z(2).star()).neg()));
    let z13 = NCPolynomial::word(vec![GeneratorId::z(1), GeneratorId::z(3)]);
    let want = NCPolynomial::word(vec![GeneratorId::z(4).star(), GeneratorId::z(2).star()]);
    assert!(apply_j(&z13).unwrap().approx_eq(&want));
    // J(2(a₁+a₂−1)) = 2(a₁+a₂−1)
    let y = fibration(0);
    assert!(apply_j(&y).unwrap().sub(&y).graded_sort().is_zero());
}

#[test]
fn j_commutes_with_both_coactions() {
    for m in [TwistModel::moyal(0.2, 1.0, 2.0), TwistModel::toric(0.3)] {
        assert!(j_coaction_defect(&m).unwrap() < 1e-12);
    }
}

#[test]
fn localised_sphere_reduces_inverse() {
    let ctx = s4_localised();
    let w = NCPolynomial::generator(GeneratorId::inverse(1));
    let x0 = NCPolynomial::generator(GeneratorId::x(0));
    let p = cmul(&w, &NCPolynomial::one().add(&x0)).sub(&NCPolynomial::one());
    assert!(ctx.is_zero(&p));
}
