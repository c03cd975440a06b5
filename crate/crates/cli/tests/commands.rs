//! Subcommands, exit codes, configuration and output formats.

use std::process::Command;

use nilorbit_cli::{dispatch, Outcome};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    dispatch(std::iter::once("nilorbit").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn oscillator_total() {
    for cols in ["1,1", "[1,1]"] {
        let v = json(&["count", "Sp(2,R)", cols, "--parity", "1"]);
        assert_eq!(v["total"], 4);
        assert_eq!(v["genuine"], true);
        assert_eq!(v["k_orbits"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn preferred_orbits_of_sp4() {
    let v = json(&["orbits", "-1", "4", "--nilp", "0"]);
    let cols: Vec<&Value> = v.as_array().unwrap().iter().map(|o| &o["columns"]).collect();
    assert_eq!(cols, [&serde_json::json!([4]), &serde_json::json!([2, 2])]);
    assert_eq!(v[0]["eps"], -1);
    assert_eq!(v[0]["dim"], 4);
}

#[test]
fn descent_of_sp2_orbit() {
    let v = json(&["descend", "Sp(2,R)", "1,0|0,1"]);
    assert_eq!(v["diagram"], serde_json::json!([[0, 1]]));
    assert_eq!(v["form"]["name"], "O(0,1)");
    let out = run(&["--format", "csv", "descend", "Sp(2,R)", "1,0|0,1"]);
    assert_eq!(out.stdout, "form,diagram,columns,|A_X|\n\"O(0,1)\",\"0,1\",[1],2\n");
}

#[test]
fn generalized_descent_adds_signature() {
    let v = json(&["gendescend", "Sp(2,R)", "1,0|0,1", "--target-sig", "2,1"]);
    assert_eq!(v["diagram"], serde_json::json!([[2, 1]]));
    assert_eq!(v["form"]["name"], "O(2,1)");
}

#[test]
fn lift_and_induce() {
    let v = json(&["lift", "-1", "[2]", "--dim", "4"]);
    assert_eq!(v["lift"]["columns"], serde_json::json!([2, 2]));
    let v = json(&["induce", "O(1,0)", "1,0", "--l", "2"]);
    assert_eq!(v["form"]["name"], "O(3,2)");
    assert_eq!(v["induced"][0]["index"], 2);
    assert_eq!(v["complex"]["columns"], serde_json::json!([3, 1, 1]));
}

#[test]
fn infchar_and_bvdual() {
    let v = json(&["infchar", "-1", "2,2"]);
    assert_eq!(v["inf_char"], serde_json::json!(["1", "0"]));
    let v = json(&["bvdual", "-1", "4"]);
    assert_eq!(v["agrees"], true);
    assert_eq!(v["checked"], true);
}

#[test]
fn korbits_of_sp4() {
    let v = json(&["korbits", "Sp(4,R)", "2,2"]);
    let orders: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|k| k["component_group_order"].as_u64().unwrap())
        .collect();
    assert_eq!(orders, [2, 4, 2]);
}

#[test]
fn classify_sp4_has_two_orbits() {
    let v = json(&["classify", "Sp(4,R)", "--parity", "0"]);
    assert_eq!(v.as_array().unwrap().len(), 2);
    let csv = run(&["--format", "csv", "classify", "Sp(4,R)", "--parity", "0"]);
    let mut lines = csv.stdout.lines();
    assert_eq!(lines.next(), Some("form,parity,orbit_columns,inf_char,k_orbit_diagram,|A_X|,total"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "Sp(2,R)", "2", "--parity", "1"]).code, 1);
    assert_eq!(run(&["korbits", "U(2,1)", "1"]).code, 1);
    assert_eq!(run(&["korbits", "Sp(2,R)", "3"]).code, 1);
    assert_eq!(run(&["count", "Sp(2,R)", "x"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["orbits", "2", "4"]).code, 2);
    assert_eq!(run(&["oracle-check", "nonsense"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn domain_errors_name_the_condition() {
    let out = run(&["count", "Sp(2,R)", "2", "--parity", "1"]);
    assert!(out.stderr.contains("Nil^p"), "{}", out.stderr);
    assert!(out.stderr.contains("parity"), "{}", out.stderr);
    let out = run(&["descend", "Sp(2,R)", "2,0"]);
    assert_eq!(out.code, 1);
    assert!(!out.stderr.is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "classify", "O(3,3)", "--parity", "0"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn config_file_and_flag_override() {
    let dir = std::env::temp_dir().join(format!("nilorbit-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nilorbit.conf");
    std::fs::write(&path, "output_format = csv\nform = Sp(2,R)\nparity = 1\nmax_dim = 6\n").unwrap();
    let p = path.to_str().unwrap();

    let out = run(&["--config", p, "classify"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("form,parity,"));
    assert!(out.stdout.contains("\"Sp(2,R)\",1,\"[1,1]\""));

    let out = run(&["--config", p, "--format", "json", "classify"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v[0]["total"], 4);

    assert_eq!(run(&["--config", p, "orbits", "1", "7"]).code, 2);

    std::fs::write(&path, "colour = blue\n").unwrap();
    assert_eq!(run(&["--config", p, "classify"]).code, 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn single_suite_passes() {
    let out = run(&["oracle-check", "oscillator"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("PASS"));
}

#[test]
fn binary_reads_config_from_environment() {
    let dir = std::env::temp_dir().join(format!("nilorbit-env-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.conf");
    std::fs::write(&path, "output_format = json\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_nilorbit"))
        .args(["count", "Sp(2,R)", "1,1", "--parity", "1"])
        .env("NILORBIT_CONFIG", &path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["total"], 4);

    let bad = Command::new(env!("CARGO_BIN_EXE_nilorbit"))
        .args(["count", "Sp(2,R)", "2", "--parity", "1"])
        .env_remove("NILORBIT_CONFIG")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
    std::fs::remove_dir_all(&dir).ok();
}
