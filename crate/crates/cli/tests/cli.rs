use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qchan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qchan"))
        .args(args)
        .env_remove("QCHAN_TOL")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn range_dcq_dim4() {
    let out = qchan(&["range", "--family", "dcq", "--dim", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!((v["p_min"].as_f64().unwrap() + 1.0 / 7.0).abs() < 1e-15);
    assert!((v["p_max"].as_f64().unwrap() - 1.0 / 9.0).abs() < 1e-15);
    assert_eq!(v["p_min_exact"], "-1/7");
    assert_eq!(v["p_max_exact"], "1/9");
}

#[test]
fn verify_cptp_exit_codes() {
    let out = qchan(&["verify", "cptp", "--family", "tcq", "--dim", "3", "--p", "0.3"]);
    assert_eq!(code(&out), 1);
    assert!(json(&out)["report"]["min_choi_eigenvalue"].as_f64().unwrap() < 0.0);

    let out = qchan(&["verify", "cptp", "--family", "tcq", "--dim", "3", "--p", "0.25"]);
    assert_eq!(code(&out), 0);

    let out = qchan(&["verify", "cptp", "--family", "dep", "--dim", "3", "--p", "-0.125"]);
    assert_eq!(code(&out), 0);

    let out = qchan(&["verify", "cptp", "--family", "dep", "--dim", "1", "--p", "0.5"]);
    assert_eq!(code(&out), 2);
    let out = qchan(&["verify", "cptp", "--family", "dep", "--dim", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn channel_files() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write(dir.path(), "f.json", r#"{"kind":"family","family":"dep","p":0.5,"dim":3}"#);
    let diag = write(dir.path(), "d.json", r#"{"kind":"diagonal","dim":2,"t":[0.5,-0.5,-0.5]}"#);
    let short = write(dir.path(), "s.json", r#"{"kind":"diagonal","dim":2,"t":[0.5,-0.5]}"#);
    let bad = write(dir.path(), "b.json", r#"{"kind":"family","family":"dep","p":0.5}"#);

    assert_eq!(code(&qchan(&["verify", "cptp", "--channel", &fam])), 0);
    let out = qchan(&["verify", "cptp", "--channel", &diag]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["channel"]["t"][1], -0.5);
    assert_eq!(code(&qchan(&["verify", "cptp", "--channel", &short])), 2);
    let out = qchan(&["verify", "cptp", "--channel", &bad]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("dim"));
    assert_eq!(code(&qchan(&["verify", "cptp", "--channel", "/nonexistent.json"])), 2);

    let state = write(dir.path(), "state.json", r#"{"vector":[[1,0],[0,0],[0,0]]}"#);
    let out = qchan(&["channel", "apply", "--channel", &fam, "--state", &state]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let data = v["output"]["data"].as_array().unwrap();
    assert!((data[0][0].as_f64().unwrap() - (0.5 + 0.5 / 3.0)).abs() < 1e-15);
    assert!((v["trace"][0].as_f64().unwrap() - 1.0).abs() < 1e-15);
    let mismatched = qchan(&["channel", "apply", "--channel", &diag, "--state", &state]);
    assert_eq!(code(&mismatched), 2);
}

#[test]
fn constant_norm_and_determinism() {
    let args = [
        "verify", "constant-norm", "--family", "dcq", "--dim", "4", "--p", "0.05", "--samples", "200", "--seed", "42",
    ];
    let a = qchan(&args);
    let b = qchan(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["criterion"]["constant"], true);

    let dir = tempfile::tempdir().unwrap();
    let perturbed = write(dir.path(), "p.json", r#"{"kind":"diagonal","dim":2,"t":[0.3,0.3,0.31]}"#);
    let out = qchan(&["verify", "constant-norm", "--channel", &perturbed, "--samples", "10"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["criterion"]["constant"], false);
}

#[test]
fn identities_and_detcheck() {
    let out = qchan(&["identities", "--dim", "4", "--trials", "20", "--seed", "7"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["notes"][0].as_str().unwrap().contains("sigma_x"));
    let out = qchan(&["detcheck", "--dim", "5", "--grid", "21"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["samples_used"], 21);
    assert_eq!(code(&qchan(&["detcheck", "--dim", "5", "--grid", "1"])), 2);
}

#[test]
fn tolerance_override() {
    let base = ["identities", "--dim", "3", "--trials", "5", "--seed", "1"];
    let out = Command::new(env!("CARGO_BIN_EXE_qchan")).args(base).env("QCHAN_TOL", "0").output().unwrap();
    assert_eq!(code(&out), 1);
    let out = Command::new(env!("CARGO_BIN_EXE_qchan")).args(base).env("QCHAN_TOL", "x").output().unwrap();
    assert_eq!(code(&out), 2);
    let mut args = base.to_vec();
    args.extend(["--tol", "1e-9"]);
    let out = Command::new(env!("CARGO_BIN_EXE_qchan")).args(&args).env("QCHAN_TOL", "0").output().unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn witness_certify_qubit() {
    let out = qchan(&["witness", "--pair", "dep,dcq", "--dim", "3", "--p", "0.2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["distinguishes"], true);
    assert!(v["witnesses"][1]["max_spectral_gap"].as_f64().unwrap() > 1e-6);
    assert_eq!(code(&qchan(&["witness", "--pair", "dep,dcq", "--dim", "3", "--p", "0.3"])), 2);
    assert_eq!(code(&qchan(&["witness", "--pair", "dep", "--dim", "3", "--p", "0.1"])), 2);

    let out = qchan(&["certify", "--pair", "dcq,tcq", "--dim", "5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["method"], "bound_matching");
    let roots: Vec<_> = v["bound_matching"][0]["roots"].as_array().unwrap().iter().map(|r| r["exact"].clone()).collect();
    assert_eq!(roots, ["0", "(5-√17)/2", "(5+√17)/2"]);
    assert_eq!(code(&qchan(&["certify", "--pair", "dep,trd", "--dim", "2"])), 2);

    let out = qchan(&["qubit-equiv", "--p", "0.7", "--trials", "100", "--seed", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&qchan(&["qubit-equiv", "--p", "2", "--trials", "1"])), 2);
}

#[test]
fn basis_listing() {
    let out = qchan(&["basis", "--dim", "3", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["size"], 9);
    assert_eq!(v["elements"][3]["pair"], serde_json::json!([2, 3]));
    assert_eq!(v["elements"][8]["sector"], "z");
    assert!(v["elements"][0]["matrix"]["data"].is_array());
    assert_eq!(code(&qchan(&["basis", "--dim", "1"])), 2);
}

#[test]
fn report_bundle_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = qchan(&["report", "--dim", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["acceptance"].as_array().unwrap().len(), 10);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 6);
}
