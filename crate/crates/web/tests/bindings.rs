use pellkit_web::{expand, family_solutions, solve_pell};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn expand_reports_period() {
    let v = parse(expand("X^2+2", 20));
    assert_eq!(v["a0"], "X");
    assert_eq!(v["period"]["length"], 2);
    assert_eq!(v["periodic"][0], "X");
}

#[test]
fn expand_accepts_gaussian_coefficients() {
    let v = parse(expand("X^2+i", 10));
    assert!(v.get("error").is_none(), "{v}");
}

#[test]
fn errors_are_json() {
    assert!(parse(expand("X^3", 10))["error"].is_string());
    assert!(parse(expand("X^^2", 10))["error"].is_string());
    assert!(parse(solve_pell("X^2+1", 0, "Z", 1))["error"].is_string());
    assert!(parse(solve_pell("X^2+1", 1, "R", 1))["error"].is_string());
    assert!(parse(solve_pell("X^2+i", 1, "Z", 1))["error"].is_string());
}

#[test]
fn solve_matches_the_cli() {
    let v = parse(solve_pell("X^2+1", -1, "Z", 2));
    assert_eq!(v["verdict"], "Solution");
    assert_eq!(v["witness"][0]["p"], "X");
    assert_eq!(v["witness"][1]["p"], "4X^3 + 3X");
    assert_eq!(parse(solve_pell("X^2+5", -1, "Z", 1))["verdict"], "ProvedNone");
    assert_eq!(parse(solve_pell("X^2-1", -1, "Zi", 1))["witness"][0]["p"], "iX");
}

#[test]
fn family_for_x2_plus_1() {
    let v = parse(family_solutions(1, 1, 3));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["exponent"], 1);
    assert_eq!(rows[1]["q"], "4X^2 + 1");
    assert!(rows.iter().all(|r| r["norm"] == "-1" && r["integral"] == true));
}
