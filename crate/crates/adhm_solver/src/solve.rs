//! Levenberg-Marquardt with deterministic multistarts.

use crate::constraints::{eval, jacobian, variable_count};
use crate::error::SolverError;
use hopf_twist::TwistModel;
use monad::{adhm_residual, ADHMData};
use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveConfig {
    pub max_iterations: usize,
    /// Initial Levenberg parameter.
    pub damping: f64,
    /// Target for the sum of the two Frobenius residuals.
    pub tolerance: f64,
    pub multistarts: usize,
    pub rng_seed: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { max_iterations: 200, damping: 1e-3, tolerance: 1e-12, multistarts: 4, rng_seed: 0 }
    }
}

impl SolveConfig {
    pub fn with_seed(seed: u64) -> Self {
        SolveConfig { rng_seed: seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        if !(self.tolerance > 0.0) {
            return Err(SolverError::InvalidConfig("tolerance must be positive".into()));
        }
        if self.multistarts == 0 {
            return Err(SolverError::InvalidConfig("multistarts must be at least 1".into()));
        }
        if !(self.damping > 0.0) || !self.damping.is_finite() {
            return Err(SolverError::InvalidConfig("damping must be positive".into()));
        }
        Ok(())
    }
}

/// Outcome of one multistart.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StartRecord {
    pub index: usize,
    pub complex_residual: f64,
    pub real_residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl StartRecord {
    pub fn residual(&self) -> f64 {
        self.complex_residual + self.real_residual
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveReport {
    pub complex_residual: f64,
    pub real_residual: f64,
    pub tolerance: f64,
    pub iterations: usize,
    pub multistart_index: usize,
    pub starts: Vec<StartRecord>,
    /// ‖F‖ after each accepted step of the winning start.
    pub history: Vec<f64>,
}

struct Run {
    x: Vec<f64>,
    record: StartRecord,
    history: Vec<f64>,
    norm: f64,
}

fn initial_point(k: usize, zeta: f64, seed: u64, start: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(start as u64);
    // complex Gaussian: re and im each with variance ½
    let scale = zeta.sqrt().max(1.0) * std::f64::consts::FRAC_1_SQRT_2;
    (0..variable_count(k)).map(|_| {
        let g: f64 = StandardNormal.sample(&mut rng);
        scale * g
    }).collect::<Vec<f64>>()
}

fn levenberg_marquardt(k: usize, model: TwistModel, mut x: Vec<f64>, cfg: &SolveConfig, index: usize) -> Run {
    let mut f = eval(k, model, &x);
    let mut cost = f.norm();
    let mut lambda = cfg.damping;
    let mut history = vec![cost];
    let mut iterations = 0;
    let total = |x: &[f64]| {
        let d = ADHMData::from_real_vector(k, model, x).expect("length fixed");
        adhm_residual(&d).expect("finite data")
    };
    let mut res = total(&x);
    while iterations < cfg.max_iterations && res.0 + res.1 > cfg.tolerance {
        iterations += 1;
        let jac = jacobian(k, model, &x);
        let jjt = &jac * jac.transpose();
        let mut accepted = false;
        while lambda < 1e16 {
            // dual form of (JᵀJ + λ)δ = −Jᵀf: δ = −Jᵀ(JJᵀ + λ)⁻¹f
            let a = &jjt + DMatrix::identity(jjt.nrows(), jjt.ncols()) * lambda;
            let Some(chol) = a.cholesky() else {
                lambda *= 4.0;
                continue;
            };
            let y: DVector<f64> = chol.solve(&f);
            let step = -(jac.transpose() * y);
            let trial: Vec<f64> = x.iter().zip(step.iter()).map(|(a, b)| a + b).collect();
            let ft = eval(k, model, &trial);
            let ct = ft.norm();
            if ct < cost {
                x = trial;
                f = ft;
                cost = ct;
                history.push(cost);
                lambda = (lambda / 3.0).max(1e-15);
                accepted = true;
                break;
            }
            lambda *= 4.0;
        }
        if !accepted {
            break;
        }
        res = total(&x);
    }
    let d = ADHMData::from_real_vector(k, model, &x).expect("length fixed");
    Run {
        record: StartRecord {
            index,
            complex_residual: res.0,
            real_residual: res.1,
            iterations,
            converged: res.0 + res.1 <= cfg.tolerance,
        },
        norm: d.norm(),
        x,
        history,
    }
}

/// Solves the ADHM equations of `model` for charge k and returns the best of
/// `cfg.multistarts` runs (smallest residual, then smallest parameter norm).
pub fn solve_with_report(
    k: usize,
    model: TwistModel,
    zeta: f64,
    cfg: &SolveConfig,
) -> Result<(ADHMData, SolveReport), SolverError> {
    cfg.validate()?;
    model.validate().map_err(monad::MonadError::from)?;
    if k == 0 {
        return Err(SolverError::InvalidConfig("k must be positive".into()));
    }
    let expected = model.zeta();
    if (zeta - expected).abs() > 1e-12 * expected.abs().max(1.0) {
        return Err(SolverError::ZetaMismatch { given: zeta, expected });
    }
    let runs: Vec<Run> = (0..cfg.multistarts)
        .map(|s| levenberg_marquardt(k, model, initial_point(k, zeta, cfg.rng_seed, s), cfg, s))
        .collect();
    let best = runs
        .iter()
        .min_by(|a, b| {
            a.record
                .residual()
                .total_cmp(&b.record.residual())
                .then(a.norm.total_cmp(&b.norm))
                .then(a.record.index.cmp(&b.record.index))
        })
        .expect("at least one start");
    if !best.record.converged {
        return Err(SolverError::NoConvergence {
            best_residual: best.record.residual(),
            tolerance: cfg.tolerance,
            starts: cfg.multistarts,
        });
    }
    let data = ADHMData::from_real_vector(k, model, &best.x)?;
    let report = SolveReport {
        complex_residual: best.record.complex_residual,
        real_residual: best.record.real_residual,
        tolerance: cfg.tolerance,
        iterations: best.record.iterations,
        multistart_index: best.record.index,
        starts: runs.iter().map(|r| r.record.clone()).collect(),
        history: best.history.clone(),
    };
    Ok((data, report))
}

pub fn solve(k: usize, model: TwistModel, zeta: f64, cfg: &SolveConfig) -> Result<ADHMData, SolverError> {
    solve_with_report(k, model, zeta, cfg).map(|(d, _)| d)
}
