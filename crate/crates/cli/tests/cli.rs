use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn adhm(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_adhm")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(r: &Run) -> Value {
    serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout))
}

fn schema_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas").join(format!("{name}.schema.json"))
}

fn assert_schema(name: &str, v: &Value) {
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(schema_path(name)).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

fn solved(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut all = vec!["solve"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let r = adhm(&all);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    path
}

#[test]
fn toric_relations_carry_the_eta_phase() {
    let r = adhm(&["relations", "--model", "toric", "--theta", "0.25", "--space", "C4"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_schema("relations", &v);
    let rules = v["relations"]["rules"].as_array().unwrap();
    let rule = rules.iter().find(|x| x["lhs"] == serde_json::json!(["z3", "z1"])).expect("z3 z1 rule");
    let terms = rule["rhs"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["word"], serde_json::json!(["z1", "z3"]));
    assert_eq!(terms[0]["mu_pow"], 1);
    assert_eq!(terms[0]["hbar_pow"], 0);
    assert_eq!(v["transpositions_only"], false);
}

#[test]
fn moyal_at_zero_hbar_gives_only_transpositions() {
    let r = adhm(&["relations", "--model", "moyal", "--hbar", "0", "--alpha", "1", "--beta", "1"]);
    assert_eq!(r.code, 0);
    let v = json(&r);
    assert_eq!(v["transpositions_only"], true);
    for rule in v["relations"]["rules"].as_array().unwrap() {
        let terms = rule["rhs"]["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 1);
        let mut lhs = rule["lhs"].as_array().unwrap().clone();
        lhs.reverse();
        assert_eq!(terms[0]["word"], Value::Array(lhs));
        assert_eq!(terms[0]["re"], 1.0);
    }
    let text = adhm(&["relations", "--model", "moyal", "--hbar", "0.1", "--format", "text"]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.lines().any(|l| l.starts_with("z4 z3 = ")), "{}", text.stdout);
}

#[test]
fn solve_writes_residuals_below_tolerance() {
    let dir = tempfile::tempdir().unwrap();
    let path = solved(dir.path(), "d.json", &["--k", "1", "--model", "moyal", "--hbar", "0.1", "--alpha", "1", "--beta", "1", "--seed", "7"]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_schema("solve", &v);
    assert!(v["complex_residual"].as_f64().unwrap() <= 1e-12);
    assert!(v["real_residual"].as_f64().unwrap() <= 1e-12);
    assert_eq!(v["tolerance"], 1e-12);
    assert_eq!(v["data"]["k"], 1);
}

#[test]
fn same_seed_gives_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--k", "2", "--seed", "3"];
    let a = solved(dir.path(), "a.json", &args);
    let b = solved(dir.path(), "b.json", &args);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let c = solved(dir.path(), "c.json", &["--k", "2", "--seed", "4"]);
    assert_ne!(std::fs::read(&a).unwrap(), std::fs::read(&c).unwrap());
    let i1 = adhm(&["instanton", "--data", a.to_str().unwrap(), "--points", "5", "--seed", "2", "--check-asd"]);
    let i2 = adhm(&["instanton", "--data", a.to_str().unwrap(), "--points", "5", "--seed", "2", "--check-asd"]);
    assert_eq!(i1.stdout, i2.stdout);
}

#[test]
fn verify_monad_passes_on_solutions_and_fails_on_perturbations() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["--model", "moyal", "--hbar", "0.1"],
        vec!["--model", "toric", "--theta", "0.25"],
        vec!["--k", "2"],
    ] {
        let path = solved(dir.path(), "m.json", &args);
        let r = adhm(&["verify-monad", "--data", path.to_str().unwrap()]);
        assert_eq!(r.code, 0, "{}", r.stdout);
        assert_schema("verify-monad", &json(&r));

        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        // B₁ only enters through commutators, which vanish for k = 1
        let x = v["data"]["I"][0][0].as_f64().unwrap();
        v["data"]["I"][0][0] = Value::from(x + 1e-3);
        let bad = dir.path().join("bad.json");
        std::fs::write(&bad, v.to_string()).unwrap();
        let r = adhm(&["verify-monad", "--data", bad.to_str().unwrap()]);
        assert_eq!(r.code, 1);
        let out = json(&r);
        assert_schema("verify-monad", &out);
        assert_eq!(out["pass"], false);
    }
}

#[test]
fn instanton_checks_classical_and_deformed_data() {
    let dir = tempfile::tempdir().unwrap();
    let c = solved(dir.path(), "c.json", &["--k", "1", "--seed", "7"]);
    let r = adhm(&["instanton", "--data", c.to_str().unwrap(), "--points", "10", "--seed", "1", "--check-asd"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = json(&r);
    assert_schema("instanton", &v);
    assert_eq!(v["asd_residuals"].as_array().unwrap().len(), 10);
    let names: Vec<&str> = v["report"]["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"asd_residual_max") && names.contains(&"curvature_fd_agreement"));

    let m = solved(dir.path(), "m.json", &["--model", "moyal", "--hbar", "0.1", "--seed", "7"]);
    let r = adhm(&["instanton", "--data", m.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = json(&r);
    assert_schema("instanton", &v);
    assert_eq!(v["report"]["checks"].as_array().unwrap().len(), 4);
}

#[test]
fn charge_and_moduli_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let c = solved(dir.path(), "c.json", &["--k", "1", "--seed", "7"]);
    let r = adhm(&["charge", "--data", c.to_str().unwrap(), "--resolution", "4"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = json(&r);
    assert_schema("charge", &v);
    assert!((v["charge"].as_f64().unwrap() - 1.0).abs() < 0.01);

    let r = adhm(&["charge", "--data", c.to_str().unwrap(), "--resolution", "4", "--budget", "10"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("budget"));

    let r = adhm(&["moduli-dim", "--data", c.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = json(&r);
    assert_schema("moduli-dim", &v);
    assert_eq!(v["analysis"]["raw_nullity"], 9);
    assert_eq!(v["unframed_dimension"], 5);
}

#[test]
fn twistor_checks_pass() {
    let r = adhm(&["twistor-checks"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = json(&r);
    assert_schema("twistor-checks", &v);
    assert_eq!(v["models"].as_array().unwrap().len(), 2);
    let r = adhm(&["twistor-checks", "--model", "toric", "--theta", "0.1"]);
    assert_eq!(r.code, 0);
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{\"k\": 1}").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["relations", "--model", "toric"],
        vec!["relations", "--model", "toric", "--theta", "0.2", "--hbar", "0.1"],
        vec!["relations", "--model", "classical", "--theta", "0.2"],
        vec!["relations", "--hbar", "0.1"],
        vec!["relations", "--model", "toric", "--theta", "1.5"],
        vec!["relations", "--model", "moyal", "--hbar", "0.1", "--alpha", "1", "--beta", "-1"],
        vec!["relations", "--space", "S9"],
        vec!["solve", "--k", "0"],
        vec!["solve", "--model", "moyal", "--hbar", "0.1", "--zeta", "0.3"],
        vec!["solve", "--multistarts", "0"],
        vec!["verify-monad", "--data", missing.to_str().unwrap()],
        vec!["charge", "--data", garbage.to_str().unwrap()],
        vec!["instanton"],
        vec!["frobnicate"],
    ];
    for args in cases {
        let r = adhm(&args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        assert!(r.stdout.is_empty(), "{args:?}");
        assert!(!r.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(adhm(&["--help"]).code, 0);
}

#[test]
fn deformed_charge_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let m = solved(dir.path(), "m.json", &["--model", "toric", "--theta", "0.25"]);
    let r = adhm(&["charge", "--data", m.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("classical"));
}

#[test]
fn computational_failures_exit_with_one() {
    let r = adhm(&["solve", "--k", "2", "--max-iterations", "0"]);
    assert_eq!(r.code, 1);
    let v = json(&r);
    assert_schema("solve", &v);
    assert!(v["error"].as_str().unwrap().contains("no start converged"));

    let dir = tempfile::tempdir().unwrap();
    let c = solved(dir.path(), "c.json", &["--k", "1", "--seed", "7"]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&c).unwrap()).unwrap();
    v["data"]["I"][0][0] = Value::from(2.0);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let r = adhm(&["moduli-dim", "--data", bad.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    let out = json(&r);
    assert_schema("error", &out);
    assert!(out["error"].as_str().unwrap().contains("not a solution"));
}
