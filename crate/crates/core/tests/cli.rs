use std::process::{Command, Output};

fn anyonrg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anyonrg")).args(args).output().expect("spawn anyonrg")
}

#[test]
fn verify_passes_by_default() {
    let out = anyonrg(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# schema-version: 1\n# command: verify\n# config: {"));
    assert!(!text.lines().any(|l| l.ends_with(",false")));
}

#[test]
fn corrupted_loop_value_fails_verification() {
    let out = anyonrg(&["verify", "--delta-override", "1.0"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("tl_numeric,") && l.contains("e_i^2 = delta e_i") && l.ends_with(",false")));
    // The symbolic suite does not depend on the override.
    assert!(text.lines().filter(|l| l.starts_with("tl_symbolic,")).all(|l| l.ends_with(",true")));
}

#[test]
fn json_output_parses_and_records_config() {
    let out = anyonrg(&["flow", "--depth-M", "2", "--format", "json", "--separations=-1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["config"]["depth_m"], 2);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3 * 2);
    assert_eq!(v["rows"][0]["separation"], -1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(anyonrg(&["flow", "--depth-M", "40"]).status.code(), Some(2));
    assert_eq!(anyonrg(&["flow", "--separations", "0"]).status.code(), Some(2));
    assert_eq!(anyonrg(&["gs", "--half-length", "0"]).status.code(), Some(2));
    assert_eq!(anyonrg(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gs.csv");
    let out = anyonrg(&["gs", "--half-length", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let rows = text.lines().filter(|l| !l.starts_with('#')).count();
    assert_eq!(rows, 1 + 4 * 4);
}
