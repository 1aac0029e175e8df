//! End-to-end checks of the binary: output values, JSON shapes, exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seifcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_seifcalc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn euler_of_the_base_example() {
    let out = run(&["seifert", "euler", "2,1;2,-1;2,-1"]);
    assert_eq!(stdout_json(&out), serde_json::json!("1/2"));
}

#[test]
fn bound_table_entry() {
    let out = run(&["cusp", "bound", "2", "3"]);
    assert_eq!(stdout_json(&out), serde_json::json!(9));
}

#[test]
fn normalize_shape() {
    let out = run(&["seifert", "normalize", "2,3;3,-1;22,-15"]);
    let v = stdout_json(&out);
    assert_eq!(v["b"], -1);
    assert_eq!(v["fibers"], serde_json::json!([[2, 1], [3, 2], [22, 7]]));
}

#[test]
fn h1_shape() {
    let out = run(&["seifert", "h1", "2,1;2,-1;2,-1"]);
    let v = stdout_json(&out);
    assert_eq!(v, serde_json::json!({"torsion": [2, 2], "rank": 0}));
}

#[test]
fn fiber_order_matches_lens_order() {
    let out = run(&["seifert", "fiber-order", "2,-3;17,13", "--fiber", "0"]);
    assert_eq!(stdout_json(&out), serde_json::json!(25));
    let out = run(&["seifert", "fiber-order", "2,1;2,-1;2,-1"]);
    assert_eq!(stdout_json(&out), serde_json::json!(1));
}

#[test]
fn infeasible_results_exit_2() {
    let out = run(&[
        "plumbing", "limak", "--graph", "figure1", "--a", "24,13,0,0,0,0,0,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["openbook", "solve-dagger", "2,2,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_input_exits_1() {
    let out = run(&["seifert", "euler", "4,2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["cusp", "bound", "4", "10"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn attach_report_via_stdin() {
    let payload = r#"{
        "openbook": {"genus": 0, "interior": [[13, 7]],
                     "bindings": [{"pair": [1, 0], "c": 51, "b": 1},
                                  {"pair": [2, -1], "c": 25, "b": 1}],
                     "n": 52},
        "targets": [2, 3],
        "slopes": ["26", "13/2"]
    }"#;
    let out = run_stdin(&["--input", "-", "cobordism", "attach"], payload);
    let v = stdout_json(&out);
    assert_eq!(v["chi"], -48);
    assert_eq!(v["canonical_pairing"], "-28");
    assert_eq!(v["framings_page"], serde_json::json!(["50", "23/2"]));
    assert_eq!(v["framings_slope"], serde_json::json!(["24", "5"]));
    assert_eq!(v["sign"], -1);
}

#[test]
fn verify_single_case_and_all() {
    let out = run(&["verify", "--case", "lemma-7.4"]);
    let v = stdout_json(&out);
    assert_eq!(v["name"], "lemma-7.4");
    let out = run(&["verify", "--all"]);
    let v = stdout_json(&out);
    assert_eq!(v["failed"], 0);
    let out = run(&["verify", "--case", "lemma-0.0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_lists_cases_without_flags() {
    let out = run(&["verify"]);
    let v = stdout_json(&out);
    let names: Vec<String> =
        serde_json::from_value(v["cases"].clone()).expect("list of names");
    assert!(names.iter().any(|n| n == "figure-1-limak"));
}

#[test]
fn pretty_format_is_multiline() {
    let out = run(&["--format", "pretty", "seifert", "h1", "2,1;3,2"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().count() > 1);
}

#[test]
fn resolve_reports_determinant() {
    let out = run(&["plumbing", "resolve", "2", "13", "24"]);
    let v = stdout_json(&out);
    assert_eq!(v["det_abs"], 24);
    assert_eq!(v["graph"]["vertices"][0]["w"], -1);
}

#[test]
fn case_data_override_is_honored() {
    let dir = std::env::temp_dir().join("seifcalc-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cases.json");
    std::fs::write(
        &path,
        r#"{"cases": [{"name": "only-case", "citation": "ad hoc", "kind": "m-table",
            "entries": [{"p": 2, "q": 3, "bound": 9, "source": "reported"}]}]}"#,
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_seifcalc"))
        .args(["verify", "--all"])
        .env("SEIFCALC_CASE_DATA", &path)
        .output()
        .expect("binary runs");
    let v = stdout_json(&out);
    assert_eq!(v["reports"][0]["name"], "only-case");
    assert_eq!(v["failed"], 0);
}
