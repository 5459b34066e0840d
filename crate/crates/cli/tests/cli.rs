use std::process::{Command, Output};

use serde_json::Value;

fn pellkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pellkit"))
        .args(args)
        .env_remove("PELLKIT_MAX_STEPS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn assert_valid(doc: &Value) {
    let schema: Value = serde_json::from_str(pellkit_cli::REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{doc:#}");
}

#[test]
fn cfrac_x2_plus_1() {
    let o = pellkit(&["cfrac", "X^2+1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[X; 2X]"), "{}", stdout(&o));
}

#[test]
fn cfrac_json_document() {
    let o = pellkit(&["cfrac", "X^4+3", "--max-steps", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_valid(&doc);
    assert_eq!(doc["period"]["length"], 2);
    assert_eq!(doc["a0"], "X^2");
    assert!(doc["verdict"].is_null());
}

#[test]
fn cfrac_without_period_exits_3_with_a_full_document() {
    let o = pellkit(&["cfrac", "X^4+X+1", "--max-steps", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(3));
    let doc = json(&o);
    assert_valid(&doc);
    assert!(doc["period"].is_null());
}

#[test]
fn odd_degree_is_invalid_input() {
    let o = pellkit(&["cfrac", "X^3+1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("degree"));
}

#[test]
fn parse_error_reports_offset() {
    let o = pellkit(&["solve", "X^2 + + 3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('5'));
}

#[test]
fn solve_lists_odd_powers() {
    let o = pellkit(&["solve", "X^2+1", "--count", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_valid(&doc);
    assert_eq!(doc["verdict"], "Solution");
    let w = doc["witness"].as_array().unwrap();
    assert_eq!(w.len(), 2);
    assert_eq!(w[0]["p"], "X");
    assert_eq!(w[1]["q"], "4X^2 + 1");
}

#[test]
fn solve_proved_none_exits_4() {
    let o = pellkit(&["solve", "X^2+5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(4));
    let doc = json(&o);
    assert_valid(&doc);
    assert_eq!(doc["verdict"], "ProvedNone");
    assert!(doc["witness"].is_null());
}

#[test]
fn solve_none_within_bounds_exits_5() {
    let o = pellkit(&[
        "solve", "X^4+X+1", "--max-steps", "8", "--box-deg", "1", "--box-bound", "1", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(5));
    let doc = json(&o);
    assert_valid(&doc);
    assert_eq!(doc["verdict"], "NoneWithinBounds");
    assert_eq!(doc["bounds"]["max_steps"], 8);
}

#[test]
fn solve_over_gaussian_integers() {
    let o = pellkit(&["solve", "X^2-1", "--ring", "Zi"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("iX"), "{}", stdout(&o));
    // Gaussian coefficients are rejected over Z
    assert_eq!(pellkit(&["solve", "X^2+i"]).status.code(), Some(2));
}

#[test]
fn max_steps_precedence() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_pellkit"));
        c.args(["cfrac", "X^4+X+1", "--format", "json"]).env_remove("PELLKIT_MAX_STEPS");
        if let Some(v) = env {
            c.env("PELLKIT_MAX_STEPS", v);
        }
        if let Some(v) = flag {
            c.args(["--max-steps", v]);
        }
        let doc = json(&c.output().unwrap());
        doc["states"].as_array().unwrap().len()
    };
    let default = run(None, None);
    let from_env = run(Some("5"), None);
    let from_flag = run(Some("5"), Some("7"));
    assert!(from_env < from_flag && from_flag < default, "{from_env} {from_flag} {default}");
}

#[test]
fn invalid_env_value_is_invalid_input() {
    let o = Command::new(env!("CARGO_BIN_EXE_pellkit"))
        .args(["cfrac", "X^2+1"])
        .env("PELLKIT_MAX_STEPS", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_csv_header_and_quoting() {
    let o = pellkit(&["sweep", "--family", "xk_d", "--k", "1", "--d", "-2..2", "--sign", "neg"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header[..4], ["family", "k", "d", "a"]);
    assert!(header.contains(&"neg_solvable".to_string()));
    let rows: Vec<_> = rdr.records().map(|r| r.unwrap()).collect();
    // d = 0 is skipped or reported, but d = 1 must be solvable
    let solvable = header.iter().position(|h| h == "neg_solvable").unwrap();
    let d = header.iter().position(|h| h == "d").unwrap();
    for r in &rows {
        assert_eq!(&r[solvable] == "true", &r[d] == "1", "{r:?}");
    }
    assert!(text.lines().nth(1).unwrap().starts_with('"'));
}

#[test]
fn sweep_json_is_independent_of_jobs() {
    let args = |jobs: &'static str| {
        vec!["sweep", "--family", "xk_d", "--k", "1..2", "--d", "-3..3", "--jobs", jobs, "--format", "json"]
    };
    let one = json(&pellkit(&args("1")));
    let two = json(&pellkit(&args("2")));
    assert_valid(&one);
    assert_eq!(one, two);
}

#[test]
fn sweep_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let o = pellkit(&["sweep", "--family", "xk_d", "--k", "1", "--d", "1..2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 3);

    let bad = dir.path().join("missing").join("rows.csv");
    let o = pellkit(&["sweep", "--family", "xk_d", "--k", "1", "--d", "1", "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites_pass_and_validate() {
    for suite in ["identities", "mason"] {
        let o = pellkit(&["verify", suite, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        let doc = json(&o);
        assert_valid(&doc);
        assert_eq!(doc["passed"], true);
    }
}

#[test]
fn bad_range_is_invalid_input() {
    let o = pellkit(&["sweep", "--family", "xk_d", "--k", "3..1"]);
    assert_eq!(o.status.code(), Some(2));
}
