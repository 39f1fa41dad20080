use std::path::PathBuf;
use std::process::{Command, Output};

use cartan_core::maxwell::critical_moduli;
use serde_json::Value;

fn cartan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cartan"))
        .args(args)
        .env_remove("CARTAN_TOL")
        .output()
        .expect("spawn cartan")
}

fn cartan_env(args: &[&str], tol: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cartan"))
        .args(args)
        .env("CARTAN_TOL", tol)
        .output()
        .expect("spawn cartan")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_out(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn json_err(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "schemas", &format!("{name}.json")]
        .iter()
        .collect();
    let s: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn assert_valid(name: &str, v: &Value) {
    let val = schema(name);
    let errs: Vec<String> = val.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errs.is_empty(), "{name}: {errs:?}");
}

/// Parse CSV output into a header and rows of fields.
fn csv_rows(s: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = s.lines();
    let header = lines.next().unwrap().split(',').map(str::to_string).collect();
    (header, lines.map(|l| l.split(',').map(str::to_string).collect()).collect())
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn json_outputs_match_schemas() {
    let cases: [(&str, Vec<&str>); 8] = [
        ("classify", vec!["classify", "--theta", "1", "--c", "0.3", "--alpha", "2", "--beta", "0.5"]),
        ("classify", vec!["classify", "--alpha", "0", "--c", "1"]),
        ("exp", vec!["exp", "--theta", "0.2", "--c", "1", "--alpha", "1", "--t", "3", "--samples", "5", "--format", "json"]),
        ("elastica", vec!["elastica", "--k", "0.3,0.95", "--samples", "8", "--format", "json"]),
        ("tables", vec!["tables", "--grid", "5", "--format", "json"]),
        ("tables", vec!["tables", "--grid", "5", "--kind", "maxwell", "--format", "json"]),
        ("compare", vec!["compare", "--samples", "12", "--format", "json"]),
        ("constants", vec!["constants"]),
    ];
    for (name, args) in cases {
        assert_valid(name, &json_out(&cartan(&args)));
    }
}

#[test]
fn shoot_json_and_errors_match_schemas() {
    let q = ["--x", "0.4", "--y", "0.9", "--z", "0.06", "--v", "-0.03", "--w", "0.02"];
    let ok = cartan(&[&["shoot"][..], &q].concat());
    assert_valid("shoot", &json_out(&ok));

    let dom = cartan(&["shoot", "--x", "1", "--y", "0", "--z", "0", "--v", "0.2", "--w", "0.1"]);
    assert_eq!(dom.status.code(), Some(2));
    assert!(dom.stdout.is_empty());
    let e = json_err(&dom);
    assert_valid("error", &e);
    assert_eq!(e["error"], "domain");

    let conv = cartan(&[&["shoot"][..], &q, &["--max-starts", "0"]].concat());
    assert_eq!(conv.status.code(), Some(3));
    assert_valid("error", &json_err(&conv));

    let parse = cartan(&["shoot", "--x", "one"]);
    assert_eq!(parse.status.code(), Some(4));
    assert_valid("error", &json_err(&parse));
}

#[test]
fn classify_examples() {
    let c4 = json_out(&cartan(&["classify", "--theta", "0", "--c", "0", "--alpha", "1", "--beta", "0"]));
    assert_eq!(c4["stratum"], "C4");
    let c6 = json_out(&cartan(&["classify", "--alpha", "0", "--c", "1"]));
    assert_eq!(c6["stratum"], "C6");
    let c1 = json_out(&cartan(&["classify", "--theta", "1.5708", "--c", "0", "--alpha", "1", "--beta", "0"]));
    assert_eq!(c1["stratum"], "C1");
    assert!((c1["k"].as_f64().unwrap() - 0.7071).abs() < 1e-4);
}

#[test]
fn exp_first_row_is_identity() {
    let o = cartan(&["exp", "--theta", "0.7", "--c", "-0.4", "--alpha", "1.3", "--beta", "2", "--t", "5"]);
    let (h, rows) = csv_rows(&stdout(&o));
    assert_eq!(h, ["t", "x", "y", "z", "v", "w", "theta"]);
    assert_eq!(rows.len(), 101);
    assert!(rows[0][..6].iter().all(|f| f == "0"));
}

#[test]
fn c7_trajectory_is_cubic() {
    let th: f64 = 0.9;
    let o = cartan(&["exp", "--theta", "0.9", "--t", "4", "--samples", "16"]);
    let (_, rows) = csv_rows(&stdout(&o));
    for r in rows {
        let t = num(&r[0]);
        let (s, c) = th.sin_cos();
        let want = [t * c, t * s, 0.0, s * t.powi(3) / 6.0, -c * t.powi(3) / 6.0];
        for (f, w) in r[1..6].iter().zip(want) {
            assert!((num(f) - w).abs() < 1e-9, "t = {t}: {f} vs {w}");
        }
    }
}

#[test]
fn tolerance_from_environment() {
    let args = ["exp", "--theta", "0.3", "--c", "1.9", "--alpha", "2", "--t", "30", "--samples", "3"];
    let dflt = stdout(&cartan(&args));
    let loose = stdout(&cartan_env(&args, "1e-3"));
    assert_ne!(dflt, loose);
    let flag = stdout(&cartan(&[&args[..], &["--tol", "1e-3"]].concat()));
    assert_eq!(loose, flag);
    // The flag wins over the environment.
    assert_eq!(stdout(&cartan_env(&[&args[..], &["--tol", "1e-12"]].concat(), "1e-3")), dflt);
    assert_eq!(cartan_env(&args, "abc").status.code(), Some(4));
    assert_eq!(cartan_env(&args, "0").status.code(), Some(4));
}

#[test]
fn byte_identical_reruns() {
    for args in [
        vec!["tables", "--grid", "40"],
        vec!["elastica", "--grid", "3", "--samples", "20"],
        vec!["compare", "--samples", "50", "--seed", "11"],
    ] {
        let a = cartan(&args);
        let b = cartan(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("tables.csv");
    let o = cartan(&["tables", "--grid", "9", "--output", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&p).unwrap(), stdout(&cartan(&["tables", "--grid", "9"])));
}

#[test]
fn constants_output() {
    let c = json_out(&cartan(&["constants"]));
    let g = |k: &str| c[k].as_f64().unwrap();
    assert!((g("k0") - 0.909).abs() < 1e-3);
    assert!((g("k1") - 0.802).abs() < 1e-3);
    assert!((g("t1z0") - 1.430).abs() < 1e-3);
    assert!((g("t2v0") - 1.465).abs() < 1e-3);
    assert!(g("zeta") < 2.0);
    assert_eq!(c["zeta_below_two"], true);

    let (h, rows) = csv_rows(&stdout(&cartan(&["constants", "--format", "csv"])));
    assert_eq!(h, ["name", "value"]);
    assert_eq!(rows[0], ["k0", "0.908909"]);
    assert_eq!(rows[3], ["t2v0", "1.464732"]);
}

#[test]
fn cut_table_branch_logic() {
    let (_, cut) = csv_rows(&stdout(&cartan(&["tables", "--grid", "60"])));
    let (_, mx) = csv_rows(&stdout(&cartan(&["tables", "--grid", "60", "--kind", "maxwell"])));
    assert_eq!(cut.len(), 2 * mx.len());
    let (infl, non) = cut.split_at(mx.len());
    for ((ci, cn), m) in infl.iter().zip(non).zip(&mx) {
        assert_eq!(ci[1], m[0]);
        let (t1z, t1v, t2v) = (num(&m[1]), num(&m[2]), num(&m[3]));
        assert_eq!(ci[0], "inflectional");
        assert_eq!(num(&ci[2]), t1z.min(1.0));
        assert_eq!(num(&ci[3]), t1z.min(t1v));
        assert_eq!(cn[0], "non-inflectional");
        assert_eq!(num(&cn[2]), 1.0);
        assert_eq!(num(&cn[3]), t2v);
        assert!(num(&ci[3]) >= num(&ci[2]) && num(&cn[3]) >= num(&cn[2]));
        assert_eq!(num(&ci[2]) == num(&ci[3]), t1z.min(t1v) == t1z.min(1.0));
    }
}

#[test]
fn elastica_at_k0_stops_at_unit_time() {
    let (k0, _) = critical_moduli().unwrap();
    let o = cartan(&["elastica", "--k", &format!("{k0:e}"), "--family", "inflectional", "--samples", "10"]);
    let (h, rows) = csv_rows(&stdout(&o));
    let (mu_t, arc) = (h.iter().position(|s| s == "mu_t").unwrap(), h.iter().position(|s| s == "arc").unwrap());
    let last = rows.last().unwrap();
    assert!((num(&last[mu_t]) - 1.0).abs() < 1e-9);
    assert!(rows.iter().all(|r| r[arc] == "engel"));

    let o = cartan(&["elastica", "--k", "0.5", "--samples", "10"]);
    let (_, rows) = csv_rows(&stdout(&o));
    let non: Vec<_> = rows.iter().filter(|r| r[0] == "non-inflectional").collect();
    assert!(non.iter().any(|r| r[arc] == "cartan"));
    let split = non.iter().filter(|r| r[arc] == "engel").last().unwrap();
    assert!((num(&split[mu_t]) - 1.0).abs() < 1e-12);
}

#[test]
fn shoot_round_trip_and_rotation() {
    // Forward target from a C1 covector.
    let exp = json_out(&cartan(&[
        "exp", "--theta", "0.4", "--c", "0.9", "--alpha", "1.5", "--beta", "0.2", "--t", "2.5", "--samples", "1", "--format", "json",
        "--tol", "1e-15",
    ]));
    let end = &exp["samples"][1];
    let q: Vec<f64> = ["x", "y", "z", "v", "w"].iter().map(|k| end[*k].as_f64().unwrap()).collect();
    let args = |q: &[f64]| -> Vec<String> {
        let mut a = vec!["shoot".to_string()];
        for (k, v) in ["--x", "--y", "--z", "--v", "--w"].iter().zip(q) {
            a.push(k.to_string());
            a.push(format!("{v:e}"));
        }
        a
    };
    let run = |a: Vec<String>| json_out(&cartan(&a.iter().map(String::as_str).collect::<Vec<_>>()));
    let r = run(args(&q));
    assert!((r["t"].as_f64().unwrap() - 2.5).abs() < 1e-6);
    assert!((r["c"].as_f64().unwrap() - 0.9).abs() < 1e-6);
    assert!((r["alpha"].as_f64().unwrap() - 1.5).abs() < 1e-6);
    assert!(r["residual"].as_f64().unwrap() < 1e-9);

    // R_η turns (x, y) and (v, w) by −η and fixes z.
    let eta: f64 = 1.1;
    let (s, c) = eta.sin_cos();
    let rot = [q[0] * c + q[1] * s, -q[0] * s + q[1] * c, q[2], q[3] * c + q[4] * s, -q[3] * s + q[4] * c];
    let rr = run(args(&rot));
    assert!((rr["distance"].as_f64().unwrap() - r["distance"].as_f64().unwrap()).abs() < 1e-8);
    let gap = |a: f64, b: f64| (a - b + std::f64::consts::PI).rem_euclid(std::f64::consts::TAU) - std::f64::consts::PI;
    assert!(gap(rr["theta"].as_f64().unwrap(), r["theta"].as_f64().unwrap() - eta).abs() < 1e-6);
    assert!(gap(rr["beta"].as_f64().unwrap(), r["beta"].as_f64().unwrap() - eta).abs() < 1e-6);
}

#[test]
fn help_and_version_exit_zero() {
    let o = cartan(&["--help"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("shoot"));
    assert!(cartan(&["--version"]).status.success());
}
