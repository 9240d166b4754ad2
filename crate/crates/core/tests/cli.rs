use std::process::{Command, Output};

use serde_json::{json, Value};

fn polarlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polarlab")).args(args).env_remove("POLARLAB_SEED").output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn classify_two_point() {
    let o = polarlab(&["classify", "--operator", "two_point.json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["monotone"], false);
    assert_eq!(v["quasimonotone"], true);
    assert_eq!(v["pseudomonotone"], false);
}

#[test]
fn fiber_of_ejem1_at_zero() {
    let o = polarlab(&["fiber", "--operator", "ejem1", "--x", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o), json!({"neg": "open", "zero": true, "pos": "open"}));
    let o = polarlab(&["fiber", "--operator", "ejem1", "--x", "-1/2"]);
    assert_eq!(stdout_json(&o), json!({"neg": "open", "zero": false, "pos": "absent"}));
}

#[test]
fn stampacchia_on_two_points_is_empty() {
    let o = polarlab(&["vip", "--operator", "ejem43_polar.json", "--K", r#"{"finite":[["1"],["2"]]}"#, "--which", "S"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o), json!({"solutions": []}));
}

#[test]
fn polar_candidate_membership() {
    let o = polarlab(&["polar", "--operator", "ejem_variational", "--candidate", r#"{"x":["-1"],"xs":["0"]}"#]);
    assert_eq!(stdout_json(&o), json!({"member": true}));
    let o = polarlab(&[
        "polar",
        "--operator",
        "ejem_variational",
        "--kind",
        "mu",
        "--candidate",
        r#"{"x":["1"],"xs":["0"]}"#,
    ]);
    assert_eq!(stdout_json(&o), json!({"member": false}));
}

#[test]
fn dmax_on_the_line() {
    let o = polarlab(&["dmax", "--operator", "dmax_example"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["d_maximal"], true);
}

#[test]
fn bad_input_exits_with_one() {
    let o = polarlab(&["classify", "--operator", "{not json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout_json(&o)["error"].is_string());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(polarlab(&["classify"]).status.code(), Some(2));
    assert_eq!(polarlab(&["nonsense"]).status.code(), Some(2));
    assert_eq!(polarlab(&["fiber", "--operator", "ejem1", "--x", "0", "--kind", "lambda"]).status.code(), Some(2));
}

#[test]
fn verify_seed_from_environment() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_polarlab"));
        c.args(["verify", "--only", "REL-SYM,POLAR-GALOIS", "--trials", "20"]).args(extra).env_remove("POLARLAB_SEED");
        if let Some(s) = env {
            c.env("POLARLAB_SEED", s);
        }
        let o = c.output().unwrap();
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        stdout_json(&o)
    };
    let from_env = run(Some("99"), &[]);
    assert_eq!(from_env["seed"], 99);
    assert_eq!(from_env["checks"].as_array().unwrap().len(), 2);
    let from_flag = run(Some("1"), &["--seed", "99"]);
    assert_eq!(from_flag["seed"], 99);
}

#[test]
fn verify_writes_report() {
    let dir = std::env::temp_dir().join(format!("polarlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = polarlab(&["verify", "--only", "REL-SCALE", "--trials", "10", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["fail"], 0);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["checks"][0]["name"], "REL-SCALE");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn unknown_check_is_an_error() {
    let o = polarlab(&["verify", "--only", "NO-SUCH-CHECK"]);
    assert_eq!(o.status.code(), Some(1));
}
