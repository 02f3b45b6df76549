//! `adhm` command-line tool. Every subcommand prints one JSON document.
//! Exit codes: 0 all checks pass, 1 a check failed (the report is still
//! printed), 2 usage or configuration error.

pub mod args;

use adhm_solver::{moduli_dimension, solve_with_report, SolveConfig, SolverError};
use args::{ChargeArgs, Cli, Command, DataArgs, Format, InstantonArgs, RelationsArgs, SolveArgs, TwistorArgs};
use clap::Parser;
use hopf_twist::{derive_relations, TwistModel};
use instanton::{
    charge_detailed, curvature_asd, curvature_fd_check, data_center, evaluate_connection, projector_report,
    sample_points, symbolic_projector_checks, InstantonError, QuadratureSpec,
};
use monad::{build_monad, monad_residual, residual_coefficient, ADHMData};
use serde_json::{json, Value};
use star_algebra::render::{render_relations_json, render_relations_text};
use star_algebra::{GeneratorId, Report};
use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Tolerance on the symbolic monad residual.
pub const MONAD_TOL: f64 = 1e-10;

#[derive(Debug)]
enum CliError {
    Usage(String),
    /// The computation could not produce its checks.
    Failed(String),
}

impl From<String> for CliError {
    fn from(s: String) -> Self {
        CliError::Usage(s)
    }
}

enum Output {
    Json { value: Value, pass: bool },
    Text(String),
}

fn report_json(rep: &Report) -> Value {
    serde_json::to_value(rep).expect("reports serialise")
}

fn model_json(m: &TwistModel) -> Value {
    json!({ "name": m.name(), "params": m })
}

fn read_data(path: &Path) -> Result<ADHMData, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let inner = v.get("data").cloned().unwrap_or(v);
    let d = ADHMData::from_json(&inner.to_string()).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    d.validate().map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(d)
}

fn relations(a: &RelationsArgs) -> Result<Output, CliError> {
    let model = a.model.model_or_classical()?;
    let space = a.space()?;
    let sys = derive_relations(&model, space).map_err(|e| CliError::Failed(e.to_string()))?;
    if a.format == Format::Text {
        return Ok(Output::Text(render_relations_text(&sys)));
    }
    Ok(Output::Json {
        value: json!({
            "command": "relations",
            "pass": true,
            "model": model_json(&model),
            "space": space.name(),
            "rule_count": sys.rule_count(),
            "transpositions_only": sys.is_transposition_system(),
            "relations": render_relations_json(&sys),
        }),
        pass: true,
    })
}

/// Exact-residual tolerance for the J-coaction check.
const J_COACTION_TOL: f64 = 1e-12;

fn twistor_checks(a: &TwistorArgs) -> Result<Output, CliError> {
    let models = match a.model.model()? {
        Some(m) => vec![m],
        None => vec![TwistModel::moyal(0.1, 1.0, 1.0), TwistModel::toric(0.25)],
    };
    let mut rep = twistor::verify_embeddings();
    for m in &models {
        let name = format!("j_commutes_with_coaction_{}", m.name());
        match twistor::j_coaction_defect(m) {
            Ok(d) => {
                rep.record(name, d, J_COACTION_TOL);
            }
            Err(e) => {
                rep.flag(name, false, Some(e.to_string()));
            }
        }
    }
    let pass = rep.all_pass();
    Ok(Output::Json {
        value: json!({
            "command": "twistor-checks",
            "pass": pass,
            "models": models.iter().map(model_json).collect::<Vec<_>>(),
            "report": report_json(&rep),
        }),
        pass,
    })
}

fn solve(a: &SolveArgs) -> Result<Output, CliError> {
    let model = a.model.model_or_classical()?;
    let zeta = a.zeta.unwrap_or_else(|| model.zeta());
    let cfg = SolveConfig {
        max_iterations: a.max_iterations,
        tolerance: a.tolerance,
        multistarts: a.multistarts,
        rng_seed: a.seed,
        ..SolveConfig::default()
    };
    let header = json!({ "k": a.k, "model": model_json(&model), "zeta": zeta, "seed": a.seed });
    let value = match solve_with_report(a.k, model, zeta, &cfg) {
        Ok((data, report)) => {
            let mut rep = Report::new();
            rep.record("complex_residual", report.complex_residual, cfg.tolerance);
            rep.record("real_residual", report.real_residual, cfg.tolerance);
            json!({
                "command": "solve",
                "pass": rep.all_pass(),
                "parameters": header,
                "complex_residual": report.complex_residual,
                "real_residual": report.real_residual,
                "tolerance": report.tolerance,
                "iterations": report.iterations,
                "multistart_index": report.multistart_index,
                "starts": serde_json::to_value(&report.starts).expect("serialises"),
                "report": report_json(&rep),
                "data": data.to_json(),
            })
        }
        Err(SolverError::NoConvergence { best_residual, tolerance, starts }) => json!({
            "command": "solve",
            "pass": false,
            "parameters": header,
            "error": format!("no start converged: best residual {best_residual:e}, tolerance {tolerance:e}, {starts} starts"),
            "best_residual": best_residual,
            "tolerance": tolerance,
        }),
        Err(e) => return Err(CliError::Usage(e.to_string())),
    };
    let pass = value["pass"].as_bool().unwrap_or(false);
    if let Some(path) = &a.out {
        let text = serde_json::to_string_pretty(&value).expect("serialises") + "\n";
        std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(Output::Json { value, pass })
}

fn verify_monad(a: &DataArgs) -> Result<Output, CliError> {
    let d = read_data(&a.data)?;
    let model = d.model;
    let m = build_monad(&d).map_err(|e| CliError::Failed(e.to_string()))?;
    let res = monad_residual(&m, &model).map_err(|e| CliError::Failed(e.to_string()))?;
    let spec = res.map(|p| model.specialize(p));
    let mut rep = Report::new();
    rep.record("monad_reality", m.reality_defect(), 0.0);
    let complex = (residual_coefficient(&res, &model, 1, 1) - d.complex_equation()).norm();
    rep.record("z1z1_coefficient_is_complex_equation", complex, MONAD_TOL);
    let real = (residual_coefficient(&res, &model, 1, 2) - d.real_equation()).norm();
    rep.record("z1z2_coefficient_is_real_equation", real, MONAD_TOL);
    let (z1, z2) = (GeneratorId::z(1), GeneratorId::z(2));
    let mut other: f64 = 0.0;
    for p in spec.entries() {
        for (w, c) in p.terms() {
            if w.word != [z1, z1] && w.word != [z1, z2] {
                other = other.max(c.value.norm());
            }
        }
    }
    rep.record("other_coefficients_vanish", other, MONAD_TOL);
    rep.record("monad_residual", spec.max_abs(), MONAD_TOL);
    let (ce, re) = monad::adhm_residual(&d).map_err(|e| CliError::Failed(e.to_string()))?;
    let pass = rep.all_pass();
    Ok(Output::Json {
        value: json!({
            "command": "verify-monad",
            "pass": pass,
            "k": d.k,
            "model": model_json(&model),
            "complex_residual": ce,
            "real_residual": re,
            "report": report_json(&rep),
        }),
        pass,
    })
}

fn instanton_error(e: InstantonError) -> CliError {
    match e {
        InstantonError::NotClassical(_) | InstantonError::Invalid(_) | InstantonError::QuadratureBudgetExceeded { .. } => {
            CliError::Usage(e.to_string())
        }
        _ => CliError::Failed(e.to_string()),
    }
}

fn instanton(a: &InstantonArgs) -> Result<Output, CliError> {
    let d = read_data(&a.data)?;
    if a.points == 0 {
        return Err(CliError::Usage("--points must be positive".into()));
    }
    if !(a.spread > 0.0 && a.spread.is_finite()) {
        return Err(CliError::Usage("--spread must be positive".into()));
    }
    let mut value = json!({
        "command": "instanton",
        "k": d.k,
        "model": model_json(&d.model),
    });
    let rep = if d.model.is_trivial() {
        let pts = sample_points(a.points, a.seed, data_center(&d), a.spread);
        let mut rep = projector_report(&d, &pts).map_err(instanton_error)?;
        value["points"] = json!(a.points);
        value["seed"] = json!(a.seed);
        if a.check_asd {
            rep.extend(curvature_asd(&d, &pts).map_err(instanton_error)?);
            rep.extend(curvature_fd_check(&d, &pts).map_err(instanton_error)?);
            let per_point: Result<Vec<f64>, _> =
                pts.iter().map(|x| evaluate_connection(&d, x).map(|s| s.asd_residual.unwrap_or(f64::NAN))).collect();
            value["asd_residuals"] = json!(per_point.map_err(instanton_error)?);
        }
        rep
    } else {
        // no numeric evaluation for deformed data: run the symbolic identities
        symbolic_projector_checks(&d, &d.model)
    };
    let pass = rep.all_pass();
    value["pass"] = json!(pass);
    value["report"] = report_json(&rep);
    Ok(Output::Json { value, pass })
}

fn charge(a: &ChargeArgs) -> Result<Output, CliError> {
    let d = read_data(&a.data)?;
    if !(a.tolerance > 0.0) {
        return Err(CliError::Usage("--tolerance must be positive".into()));
    }
    let spec = QuadratureSpec { budget: a.budget, ..QuadratureSpec::new(a.resolution) };
    let c = charge_detailed(&d, &spec).map_err(instanton_error)?;
    let mut rep = Report::new();
    rep.record("charge_equals_k", (c.charge - d.k as f64).abs(), a.tolerance);
    let pass = rep.all_pass();
    Ok(Output::Json {
        value: json!({
            "command": "charge",
            "pass": pass,
            "k": d.k,
            "charge": c.charge,
            "resolution": a.resolution,
            "points": c.points,
            "centres": c.centres.iter().map(|(x, s)| json!({ "center": x, "scale": s })).collect::<Vec<_>>(),
            "report": report_json(&rep),
        }),
        pass,
    })
}

fn moduli_dim(a: &DataArgs) -> Result<Output, CliError> {
    let d = read_data(&a.data)?;
    let k = d.k as i64;
    let an = match moduli_dimension(&d) {
        Ok(an) => an,
        Err(SolverError::NotASolution(r)) => return Err(CliError::Failed(format!("data is not a solution: residual {r:e}"))),
        Err(e) => return Err(CliError::Failed(e.to_string())),
    };
    let mut rep = Report::new();
    let eq = |rep: &mut Report, name: &str, got: i64, want: i64| {
        rep.flag(name, got == want, Some(format!("{got} (expected {want})")));
    };
    eq(&mut rep, "raw_nullity", an.raw_nullity as i64, k * k + 8 * k);
    eq(&mut rep, "framed_dimension", an.framed_dimension, 8 * k);
    eq(&mut rep, "frame_rotation_rank", an.frame_rotation_rank as i64, 3);
    eq(&mut rep, "unframed_dimension", an.unframed_dimension(), 8 * k - 3);
    rep.flag("constraints_independent", !an.degenerate, None);
    let pass = rep.all_pass();
    Ok(Output::Json {
        value: json!({
            "command": "moduli-dim",
            "pass": pass,
            "k": d.k,
            "model": model_json(&d.model),
            "unframed_dimension": an.unframed_dimension(),
            "analysis": serde_json::to_value(&an).expect("serialises"),
            "report": report_json(&rep),
        }),
        pass,
    })
}

fn name_of(c: &Command) -> &'static str {
    match c {
        Command::Relations(_) => "relations",
        Command::TwistorChecks(_) => "twistor-checks",
        Command::Solve(_) => "solve",
        Command::VerifyMonad(_) => "verify-monad",
        Command::Instanton(_) => "instanton",
        Command::Charge(_) => "charge",
        Command::ModuliDim(_) => "moduli-dim",
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Relations(a) => relations(a),
        Command::TwistorChecks(a) => twistor_checks(a),
        Command::Solve(a) => solve(a),
        Command::VerifyMonad(a) => verify_monad(a),
        Command::Instanton(a) => instanton(a),
        Command::Charge(a) => charge(a),
        Command::ModuliDim(a) => moduli_dim(a),
    };
    match result {
        Ok(Output::Text(t)) => {
            let _ = write!(out, "{t}");
            EXIT_PASS
        }
        Ok(Output::Json { value, pass }) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serialises"));
            if pass {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failed(msg)) => {
            let value = json!({ "command": name_of(&cli.command), "pass": false, "error": msg });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serialises"));
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAIL
        }
    }
}
