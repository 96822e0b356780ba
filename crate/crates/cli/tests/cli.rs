use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_reconfig-calc"));
    c.env_remove("RECONFIG_CALC_BOUND");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_model(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("reconfig-calc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn parse_command() {
    let o = run(&["parse", "sensor_ccsdp"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("main = R | S"));

    let wu = temp_model("wu.proc", "main = wu(0 ; 0 ; x)");
    let o = run(&["parse", wu.to_str().unwrap(), "--calculus", "ccsdp"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("calculus violation"));

    let empty = temp_model("empty.proc", "");
    let o = run(&["parse", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing `main`"));

    let bad = temp_model("bad.proc", "main = a?.\n  (b!.0");
    let o = run(&["parse", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2:8"));
}

#[test]
fn golden_traces_replay() {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&str, &[&str]); 4] = [
        ("ccsdp_normal.json", &["sensor_ccsdp", "--strategy", "first", "--steps", "1"]),
        ("ccsdp_erroneous.json", &["sensor_ccsdp", "--script", "1,0", "--steps", "2"]),
        ("webpi_normal.json", &["sensor_webpi", "--strategy", "first", "--steps", "5"]),
        ("webpi_erroneous.json", &["sensor_webpi", "--script", "1", "--steps", "5"]),
    ];
    for (file, args) in cases {
        let mut full = vec!["trace"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--format", "json"]);
        let o = run(&full);
        assert_eq!(o.status.code(), Some(0));
        let expected = std::fs::read_to_string(golden.join(file)).unwrap();
        assert_eq!(stdout(&o), expected, "{file}");
    }
}

#[test]
fn trace_command() {
    let zero = temp_model("zero.proc", "main = 0");
    let o = run(&["trace", zero.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 0);

    let o = run(&["trace", "sensor_ccsdp", "--seed", "1", "--steps", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 4);
    assert!(steps.iter().any(|s| s["term"] == "R | S"));
}

#[test]
fn check_command() {
    let o = run(&["check", "sensor_ccsdp", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["stuck_states"].as_array().unwrap().len(), 0);
    assert_eq!(v["termination"], "diverges");

    let o = run(&["check", "deadlock_pair"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("stuck states (incl. deadlocks): 1"));

    let out = temp_model("out.proc", "main = a!.0");
    assert_eq!(run(&["check", out.to_str().unwrap()]).status.code(), Some(1));

    let o = run(&["check", "sensor_ccsdp", "--bound", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bound_from_environment() {
    let o = bin()
        .args(["check", "sensor_ccsdp"])
        .env("RECONFIG_CALC_BOUND", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = bin()
        .args(["check", "sensor_ccsdp", "--bound", "100"])
        .env("RECONFIG_CALC_BOUND", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn bisim_command() {
    assert_eq!(run(&["bisim", "sensor_ccsdp", "sensor_ccsdp"]).status.code(), Some(0));

    let dup = temp_model("dup.proc", "main = a?.0 + a?.0");
    let single = temp_model("single.proc", "main = a?.0");
    let o = run(&["bisim", dup.to_str().unwrap(), single.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "equivalent\n");

    let defs = "S = v!.S + e!.S; R = v?.R + e?.{ S | R / S };";
    let s = temp_model("s.proc", &format!("{defs} main = S"));
    let r = temp_model("r.proc", &format!("{defs} main = R"));
    let o = run(&["bisim", s.to_str().unwrap(), r.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let grow = temp_model("grow.proc", "C = a!.(C | C); main = C");
    let o = run(&["bisim", grow.to_str().unwrap(), grow.to_str().unwrap(), "--bound", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn lts_command() {
    let zero = temp_model("lts_zero.proc", "main = 0");
    let o = run(&["lts", zero.to_str().unwrap(), "--format", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(!dot.contains("->"));

    let out = temp_model("lts_out.proc", "main = a!.0");
    let dot = stdout(&run(&["lts", out.to_str().unwrap(), "--format", "dot"]));
    assert_eq!(dot.matches("->").count(), 1);
    assert!(dot.contains("label=\"out a\""));

    let o = run(&["lts", "sensor_ccsdp", "--silent", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let edges = v["edges"].as_array().unwrap();
    assert!(edges.iter().any(|e| e["target"] == v["initial"]));
}
