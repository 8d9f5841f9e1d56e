use std::process::{Command, Output};

fn polyb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyb")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = polyb(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn compute_methods() {
    assert_eq!(stdout(&["compute", "--n", "2", "--k", "2", "--method", "formula"]), "14\n");
    assert_eq!(stdout(&["compute", "--n", "0", "--k", "9", "--method", "recursion"]), "1\n");
    assert_eq!(stdout(&["compute", "--n", "3", "--k", "3", "--method", "enumerate:gammafree"]), "230\n");
    assert_eq!(stdout(&["compute", "--n", "2", "--k", "3", "--method", "enumerate:vesztergombi"]), "46\n");
    assert_eq!(stdout(&["compute", "--n", "2", "--k", "2", "--format", "json"]), "{\"n\":2,\"k\":2,\"value\":\"14\"}\n");
}

#[test]
fn big_values_are_exact() {
    assert_eq!(stdout(&["compute", "--n", "1", "--k", "70"]), "1180591620717411303424\n");
}

#[test]
fn tables() {
    assert_eq!(stdout(&["table", "--max-n", "1", "--max-k", "1", "--format", "csv"]), "n,0,1\n0,1,1\n1,1,2\n");
    assert_eq!(stdout(&["table", "--max-n", "0", "--max-k", "0"]), "n,0\n0,1\n");
    assert_eq!(stdout(&["table", "--max-n", "1", "--max-k", "1", "--format", "bfile"]), "0 1\n1 1\n2 1\n3 2\n");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["table", "--max-n", "2", "--max-k", "2", "--format", "json"])).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 9);
    assert_eq!(json[8], serde_json::json!({"n": 2, "k": 2, "value": "14"}));
}

#[test]
fn enumerate_to_file_and_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lonesum.txt");
    stdout(&["enumerate", "--family", "lonesum", "--n", "2", "--k", "2", "--output", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    let matrices = polyb::matrix::parse_matrices(&text).unwrap();
    assert_eq!(matrices.len(), 14);
    assert!(!text.contains("1001") && text.starts_with("00\n00\n\n"));
    assert_eq!(stdout(&["enumerate", "--family", "callan", "--n", "2", "--k", "2", "--count-only"]), "14\n");
    let perms = stdout(&["enumerate", "--family", "maxascending", "--n", "2", "--k", "2"]);
    assert_eq!(perms.lines().count(), 14);
    assert!(perms.lines().any(|l| l == "0 1 3 4 2 5"));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["enumerate", "--family", "gammafree", "--n", "3", "--k", "4"];
    let one = stdout(&args);
    let many = stdout(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one, many);
    let verify_one = stdout(&["verify", "--check", "families", "--max", "3"]);
    let verify_many = stdout(&["verify", "--check", "families", "--max", "3", "--threads", "3"]);
    assert_eq!(verify_one, verify_many);
}

#[test]
fn verify_examples() {
    let out = stdout(&["verify", "--check", "altsum", "--max", "10"]);
    assert!(out.starts_with("PASS altsum"));
    let out = stdout(&["verify", "--check", "gamma-roundtrip", "--max", "4"]);
    assert!(out.lines().any(|l| l.trim() == "(2,2): 14 matrices"), "{out}");
    let out = stdout(&["verify", "--check", "families", "--max", "3"]);
    assert_eq!(out.lines().filter(|l| l.contains("counts agree")).count(), 7);
}

#[test]
fn codes_round_trip_through_text() {
    let text = stdout(&["codes", "--n", "2", "--k", "2"]);
    let codes = polyb::bijections::parse_gamma_codes(&text).unwrap();
    assert_eq!(codes.len(), 14);
    let again: Vec<String> = codes.iter().map(|c| c.to_text()).collect();
    assert_eq!(again.join("\n\n") + "\n", text);
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--family", "pairs", "--n", "2", "--k", "3"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| polyb(args).status.code();
    assert_eq!(code(&["compute", "--n", "2", "--k", "2"]), Some(0));
    assert_eq!(code(&["compute", "--n", "2"]), Some(2));
    assert_eq!(code(&["compute", "--n", "2", "--k", "2", "--method", "magic"]), Some(2));
    assert_eq!(code(&["compute", "--n", "2", "--k", "2", "--method", "enumerate:nonsense"]), Some(2));
    assert_eq!(code(&["table", "--max-n", "1", "--max-k", "1", "--format", "xml"]), Some(2));
    assert_eq!(code(&["verify", "--check", "nonsense"]), Some(2));
    assert_eq!(code(&["enumerate", "--family", "lonesum", "--n", "6", "--k", "2"]), Some(2));
    assert_eq!(code(&["enumerate", "--family", "callan", "--n", "5", "--k", "4", "--count-only"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
}

#[test]
fn raised_guard_warns() {
    let out = polyb(&["--max-matrix", "6", "enumerate", "--family", "lonesum", "--n", "6", "--k", "1", "--count-only"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "64\n");
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
}
