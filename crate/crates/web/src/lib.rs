//! Browser bindings. Every entry point takes plain strings and numbers and
//! returns a JSON string; failures come back as `{"error": "..."}`.

use num_bigint::BigInt;
use pellkit_core::arith::Field;
use pellkit_core::cfrac::cfrac_expand;
use pellkit_core::expr::{parse_poly, to_rational};
use pellkit_core::poly::Poly;
use pellkit_core::solver::{generate_solutions, solution_sequence, solve, PellScalar, Ring, Sign, SolveOptions};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Step cap for the page; expansions past this are slow in the browser.
const MAX_STEPS: usize = 200;

fn render(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn strings<K: Field>(ps: &[Poly<K>]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

fn expand_over<K: Field>(d: &Poly<K>, max_steps: usize) -> Result<Value, String> {
    let e = cfrac_expand(d, max_steps).map_err(|e| e.to_string())?;
    Ok(json!({
        "d_poly": d.to_string(),
        "a0": e.a0().to_string(),
        "quotients": strings(e.quotients()),
        "period": e.period().map(|p| json!({ "start": p.start, "length": p.length })),
        "periodic": e.periodic_quotients().map(strings),
    }))
}

/// Continued fraction of `sqrt(poly)`.
#[wasm_bindgen]
pub fn expand(poly: &str, max_steps: usize) -> String {
    render((|| {
        let max_steps = max_steps.clamp(1, MAX_STEPS);
        let d = parse_poly(poly).map_err(|e| e.to_string())?;
        match to_rational(&d) {
            Some(d) => expand_over(&d, max_steps),
            None => expand_over(&d, max_steps),
        }
    })())
}

fn solve_over<K: PellScalar>(d: &Poly<K>, ring: Ring, sign: Sign, count: usize) -> Result<Value, String> {
    let opts = SolveOptions { max_steps: 64, ..SolveOptions::default() };
    let v = solve(d, ring, sign, &opts).map_err(|e| e.to_string())?;
    let witnesses = match &v.witness {
        Some(w) => solution_sequence(d, w, sign, count).map_err(|e| e.to_string())?,
        None => Vec::new(),
    };
    Ok(json!({
        "d_poly": d.to_string(),
        "ring": ring.to_string(),
        "sign": sign.value(),
        "verdict": v.kind.to_string(),
        "reason": v.reason.to_string(),
        "period": v.period.map(|p| p.length),
        "witness": witnesses.iter().map(|(p, q)| json!({ "p": p.to_string(), "q": q.to_string() })).collect::<Vec<_>>(),
    }))
}

/// Decides `P^2 - D Q^2 = sign` over `ring` ("Z", "Q" or "Zi").
#[wasm_bindgen]
pub fn solve_pell(poly: &str, sign: i32, ring: &str, count: usize) -> String {
    render((|| {
        let ring: Ring = ring.parse().map_err(|e: pellkit_core::Error| e.to_string())?;
        let sign = match sign {
            -1 => Sign::Neg,
            1 => Sign::Pos,
            _ => return Err("sign must be 1 or -1".to_string()),
        };
        let count = count.clamp(1, 8);
        let d = parse_poly(poly).map_err(|e| e.to_string())?;
        match (ring, to_rational(&d)) {
            (Ring::Zi, _) => solve_over(&d, ring, sign, count),
            (_, Some(d)) => solve_over(&d, ring, sign, count),
            (_, None) => Err(format!("ring {ring} needs rational coefficients")),
        }
    })())
}

/// The first `count` odd-power solutions for `X^(2k) + d`.
#[wasm_bindgen]
pub fn family_solutions(k: u32, d: i64, count: u32) -> String {
    render((|| {
        let sols = generate_solutions(k as usize, &BigInt::from(d), count.clamp(1, 8) as usize).map_err(|e| e.to_string())?;
        Ok(json!(sols
            .iter()
            .map(|s| json!({
                "exponent": s.exponent,
                "p": s.p.to_string(),
                "q": s.q.to_string(),
                "norm": s.norm.to_string(),
                "integral": s.integral,
            }))
            .collect::<Vec<_>>()))
    })())
}
