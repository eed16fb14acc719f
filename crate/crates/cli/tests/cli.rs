//! End-to-end tests of the binary: subcommand output, JSON stability,
//! and exit codes (0 pass, 1 corpus failure, 2 usage/parse error).

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cmreduce"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn corpus_path() -> String {
    format!(
        "{}/../../data/paper_curves.jsonl",
        env!("CARGO_MANIFEST_DIR")
    )
}

#[test]
fn reduce_rational_curve() {
    let out = run(&["reduce", "--field", "Q", "--p", "7", "--ainvs", "1,-1,0,-2,-1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["kodaira"], "III");
    assert_eq!(v["v_delta_min"], 3);
    assert_eq!(v["c_local"], 2);
    assert_eq!(v["phi_geom"], serde_json::json!([2]));
    assert_eq!(v["conductor_exponent"], 2);
}

#[test]
fn reduce_quadratic_curve_with_triple_coefficients() {
    // the conductor-norm-16 CM curve over Q(sqrt(-7)) at the first place
    // above 2
    let out = run(&[
        "reduce",
        "--field",
        "-7",
        "--p",
        "2",
        "--place-index",
        "0",
        "--ainvs",
        "1/1/2,-3/-1/2,0,1,0",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["kodaira"], "I4*");
    assert_eq!(v["v_delta_min"], 12);
    assert_eq!(v["conductor_exponent"], serde_json::Value::Null);
}

#[test]
fn reduce_output_is_byte_stable() {
    let args = ["reduce", "--field", "Q", "--p", "7", "--ainvs", "1,-1,0,-2,-1"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn twist_emits_model_json() {
    let out = run(&["twist", "--field", "Q", "--ainvs", "0,0,0,3,0", "--d", "5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let ainvs = v["ainvs"].as_array().unwrap();
    assert_eq!(ainvs.len(), 5);
    assert_eq!(ainvs[3]["a"], "75"); // A d^2 = 3 * 25
}

#[test]
fn classify_cm_rows() {
    let out = run(&["classify-cm", "--p", "7", "--vp", "1", "--j", "generic", "--defined-over-base"]);
    assert_eq!(stdout(&out).trim(), r#"["I0","I0*"]"#);
    let out = run(&["classify-cm", "--p", "7", "--vp", "1", "--j", "generic"]);
    assert_eq!(stdout(&out).trim(), r#"["I0","I0*","III","III*"]"#);
    let out = run(&["classify-cm", "--p", "2", "--vp", "2", "--j", "generic"]);
    assert_eq!(stdout(&out).trim(), r#"{"not_covered":true}"#);
}

#[test]
fn genus2_types_tables_and_instantiation() {
    let out = run(&["genus2-types", "--mu", "2", "--potentially-good"]);
    assert_eq!(stdout(&out), "\"I_0-0-0\"\n\"I_0-0-0*\"\n");

    let out = run(&["genus2-types", "--mu", "10", "--restricted"]);
    assert_eq!(stdout(&out), "\"I_0-0-0\"\n\"I_0-0-0*\"\n");

    let out = run(&[
        "genus2-types",
        "--mu",
        "6",
        "--not-potentially-good",
        "--d",
        "8",
        "--r",
        "2",
    ]);
    assert_eq!(
        stdout(&out),
        "\"2IV*-0\"\n\"II-II-1\"\n\"IV-IV-2\"\n\"I_0*-II*-0\"\n\"I_0*-I_0*-3\"\n"
    );
}

#[test]
fn torsion_bound_json() {
    let out = run(&["torsion-bound", "--g", "1", "--p", "2", "--q", "2", "--e", "1", "--mu", "4"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["bound"], 256);
    assert_eq!(v["branches"], serde_json::json!([256, 20]));
}

#[test]
fn corpus_fixture_all_pass() {
    let out = run(&["corpus", &corpus_path(), "--jobs", "4"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    let v: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(v["fail"], 0);
    assert_eq!(v["not_covered"], 1);
}

#[test]
fn corpus_wrong_expectation_fails_with_exit_1() {
    let fixture = std::fs::read_to_string(corpus_path()).unwrap();
    let wrong = fixture.replacen(r#""kodaira":"III""#, r#""kodaira":"I0*""#, 1);
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(wrong.as_bytes()).unwrap();
    let out = run(&["corpus", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn corpus_empty_file_is_clean() {
    let f = tempfile::NamedTempFile::new().unwrap();
    let out = run(&["corpus", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v, serde_json::json!({"pass": 0, "fail": 0, "not_covered": 0}));
}

#[test]
fn parse_error_names_line_and_exits_2() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "{{\"label\": \"x\"").unwrap();
    let out = run(&["corpus", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn unknown_corpus_key_is_named() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        r#"{{"label":"x","field":{{"type":"Q"}},"place":{{"p":7,"index":0}},"ainvs":[],"cm":{{"D":-7,"defined_over_base":true,"order_is_maximal":true}},"surprise":1}}"#
    )
    .unwrap();
    let out = run(&["corpus", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("surprise"));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["reduce", "--field", "Q", "--p", "7", "--ainvs", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--ainvs"));

    let out = run(&["reduce", "--field", "Q", "--p", "6", "--ainvs", "1,-1,0,-2,-1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["--definitely-not-a-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_parallelism_does_not_change_output() {
    let a = run(&["corpus", &corpus_path(), "--jobs", "1"]);
    let b = run(&["corpus", &corpus_path(), "--jobs", "8"]);
    assert_eq!(stdout(&a), stdout(&b));
}
