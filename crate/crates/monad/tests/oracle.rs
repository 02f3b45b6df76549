use ::monad::*;
use hopf_twist::TwistModel;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use star_algebra::{Complex64, GeneratorId};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn models() -> Vec<TwistModel> {
    vec![TwistModel::Classical, TwistModel::moyal(0.3, 1.0, 0.5), TwistModel::toric(0.3)]
}

fn random_data(k: usize, model: TwistModel, seed: u64) -> ADHMData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = |r, s| CMatrix::from_fn(r, s, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    ADHMData::new(model, m(k, k), m(k, k), m(k, 2), m(2, k)).unwrap()
}

/// Exact solutions: diagonal B (B₂ = 0 on the torus), and I, J chosen so
/// that IJ = 0 and II* − J*J = ζ𝟙.
fn solved(k: usize, model: TwistModel) -> ADHMData {
    let mut d = ADHMData::zeros(k, model);
    for a in 0..k {
        d.b1[(a, a)] = c(0.4 * a as f64 - 0.3, 0.2);
        if !model.is_torus() {
            d.b2[(a, a)] = c(0.1, -0.5 * a as f64);
        }
    }
    let zeta = model.zeta();
    if zeta > 0.0 {
        for a in 0..k {
            d.i[(a, a.min(1))] = c(zeta.sqrt(), 0.0);
        }
    } else {
        for a in 0..k {
            let x = 0.7 + 0.2 * a as f64;
            d.i[(a, 0)] = c(x, 0.0);
            d.j[(1, a)] = c(x, 0.0);
        }
    }
    d.validate().unwrap();
    d
}

#[test]
fn canonical_monad_satisfies_reality_conditions() {
    for model in models() {
        for k in [1, 2, 3] {
            let m = build_monad(&random_data(k, model, 7 + k as u64)).unwrap();
            assert_eq!(m.reality_defect(), 0.0);
            let sys = c4_relations(&model).unwrap();
            let sj = m.sigma_jz().adjoint_in(&sys).unwrap();
            assert!(sj.sub(&m.tau_z()).unwrap().is_zero(), "{} k={k}: sigma_J* != tau", model.name());
        }
    }
}

#[test]
fn residual_coefficients_are_the_two_adhm_equations() {
    for model in models() {
        for k in [1, 2] {
            let d = random_data(k, model, 100 + k as u64);
            let res = monad_residual(&build_monad(&d).unwrap(), &model).unwrap();
            let c11 = residual_coefficient(&res, &model, 1, 1);
            let c12 = residual_coefficient(&res, &model, 1, 2);
            assert!((c11 - d.complex_equation()).norm() < 1e-12, "{}", model.name());
            assert!((c12 - d.real_equation()).norm() < 1e-12, "{}", model.name());
            for (a, b) in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)] {
                assert!(residual_coefficient(&res, &model, a, b).norm() < 1e-12);
            }
        }
    }
}

#[test]
fn solved_data_has_vanishing_monad_residual() {
    for model in models() {
        for k in [1, 2] {
            let d = solved(k, model);
            let (ce, re) = adhm_residual(&d).unwrap();
            assert!(ce < 1e-12 && re < 1e-12, "{} k={k}: ({ce}, {re})", model.name());
            let res = monad_residual(&build_monad(&d).unwrap(), &model).unwrap();
            assert!(residual_norm(&res, &model) < 1e-12, "{} k={k}", model.name());
        }
    }
}

#[test]
fn perturbed_data_fails_both_tests() {
    for model in models() {
        for k in [1, 2] {
            let mut d = solved(k, model);
            d.i[(0, 1)] += c(0.05, 0.0);
            let (ce, re) = adhm_residual(&d).unwrap();
            assert!(ce.max(re) > 1e-3);
            let res = monad_residual(&build_monad(&d).unwrap(), &model).unwrap();
            assert!(residual_norm(&res, &model) > 1e-3, "{} k={k}", model.name());
        }
    }
}

#[test]
fn moyal_zero_data_leaves_the_deformation_on_z1z2() {
    let model = TwistModel::moyal(0.3, 1.0, 0.5);
    let res = monad_residual(&build_monad(&ADHMData::zeros(1, model)).unwrap(), &model).unwrap();
    let w = [GeneratorId::z(1), GeneratorId::z(2)];
    // formal coefficient iħ(α+β), no other term
    assert_eq!(res.get(0, 0).coefficient(&w, 1, 0), c(0.0, 1.5));
    assert_eq!(res.get(0, 0).len(), 1);
    // numerically it is −ζ
    let z = residual_coefficient(&res, &model, 1, 2)[(0, 0)];
    assert!((z - c(-model.zeta(), 0.0)).norm() < 1e-14);
}

#[test]
fn toric_monad_carries_mu_phases() {
    let model = TwistModel::toric(0.25);
    let mut d = ADHMData::zeros(1, model);
    d.b1[(0, 0)] = c(1.0, 0.0);
    let m = build_monad(&d).unwrap();
    // N¹ = (−μB₂, μ̄B₁, I): the B₁ slot carries μ^{−1}
    assert_eq!(m.n[0].get(0, 1).coefficient(&[], 0, -2), c(1.0, 0.0));
    let (_, n) = m.numeric().unwrap();
    assert!((n[0][(0, 1)] - model.mu().conj()).norm() < 1e-14);
}

#[test]
fn wrong_model_is_rejected() {
    let d = ADHMData::zeros(1, TwistModel::Classical);
    let err = monad_residual(&build_monad(&d).unwrap(), &TwistModel::toric(0.1)).unwrap_err();
    assert!(matches!(err, MonadError::ModelMismatch(_)));
}

#[test]
fn tilde_generators_commute_and_carry_the_hopf_action() {
    for model in models() {
        let rep = tilde_subalgebra_check(&model).unwrap();
        assert!(rep.all_pass(), "{rep}");
    }
}

#[test]
fn bosonisation_is_multiplicative() {
    for model in models() {
        let rep = bosonisation_report(&model).unwrap();
        assert!(rep.all_pass(), "{rep}");
    }
}

#[test]
fn bosonised_sigma_matches_hand_expansion() {
    let model = TwistModel::moyal(0.3, 1.0, 0.5);
    let d = ADHMData::zeros(1, model);
    let (s, _) = tilde_sigma(&build_monad(&d).unwrap(), &model).unwrap();
    // row 0 of σ̃ is M̃³-row (1): z₃ + ½(t₁* z₁ + t₂* z₂)
    let e = s.get(0, 0);
    assert_eq!(e.coefficient(&[GeneratorId::z(3)], 0, 0), c(1.0, 0.0));
    assert_eq!(e.coefficient(&[GeneratorId::t(1).star(), GeneratorId::z(1)], 0, 0), c(0.5, 0.0));
    assert_eq!(e.coefficient(&[GeneratorId::t(2).star(), GeneratorId::z(2)], 0, 0), c(0.5, 0.0));

    let toric = TwistModel::toric(0.3);
    let (s, _) = tilde_sigma(&build_monad(&ADHMData::zeros(1, toric)).unwrap(), &toric).unwrap();
    let w = [GeneratorId::varsigma(3), GeneratorId::z(3)];
    assert_eq!(s.get(0, 0).coefficient(&w, 0, 0), c(1.0, 0.0));
    assert_eq!(s.get(0, 0).len(), 1);
}

#[test]
fn bosonised_monad_keeps_the_coordinate_part() {
    let model = TwistModel::toric(0.3);
    let m = build_monad(&random_data(1, model, 3)).unwrap();
    let b = bosonise_monad(&m, &model).unwrap();
    assert_eq!((b.sigma.rows, b.sigma.cols, b.tau.rows, b.tau.cols), (4, 1, 1, 4));
    let w = [GeneratorId::varsigma(1), GeneratorId::z(1)];
    assert_eq!(b.sigma.get(0, 0).coefficients_of(&w).len(), 1);
}

#[test]
fn gauge_transform_preserves_adhm_residual() {
    let d = random_data(2, TwistModel::moyal(0.2, 0.5, 0.5), 9);
    let t = 0.7f64;
    let g = CMatrix::from_row_slice(2, 2, &[c(t.cos(), 0.0), c(0.0, t.sin()), c(0.0, t.sin()), c(t.cos(), 0.0)]);
    let (a, b) = adhm_residual(&d).unwrap();
    let (a2, b2) = adhm_residual(&d.gauge_transform(&g)).unwrap();
    assert!((a - a2).abs() < 1e-12 && (b - b2).abs() < 1e-12);
}
