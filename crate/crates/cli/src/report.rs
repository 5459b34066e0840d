//! JSON and text renderings shared by the commands.

use std::fmt::Write as _;

use pellkit_core::arith::Field;
use pellkit_core::cfrac::{CFracExpansion, Period};
use pellkit_core::poly::Poly;
use pellkit_core::solver::{PellScalar, PellVerdict};
use serde_json::{json, Value};

pub fn period_json(p: Option<Period>) -> Value {
    match p {
        Some(p) => json!({ "start": p.start, "length": p.length }),
        None => Value::Null,
    }
}

fn strings<K: Field>(ps: &[Poly<K>]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

pub fn witness_json<K: Field>(ws: &[(Poly<K>, Poly<K>)]) -> Value {
    Value::Array(ws.iter().map(|(p, q)| json!({ "p": p.to_string(), "q": q.to_string() })).collect())
}

/// `[a0; a1, a2, ...]`, with a bar-free marker when no period was found.
pub fn quotient_line<K: Field>(exp: &CFracExpansion<K>) -> String {
    let qs = strings(exp.quotients());
    match exp.period() {
        Some(p) => {
            let head = qs[..p.start].join(", ");
            let block = qs[p.start..p.start + p.length].join(", ");
            format!("[{head}; {block}]")
        }
        None => format!("[{}; {}, ...]", qs[0], qs[1..].join(", ")),
    }
}

pub struct IdentityRow {
    pub n: usize,
    pub value: Option<String>,
    pub determinant: Option<i32>,
}

/// Convergent identities for `n = 0..=upto`, clipped to the computed range.
pub fn identity_rows<K: Field>(exp: &CFracExpansion<K>, upto: usize) -> Vec<IdentityRow> {
    let upto = match exp.period() {
        Some(_) => upto,
        None => upto.min(exp.quotients().len().saturating_sub(1)),
    };
    (0..=upto)
        .map(|n| IdentityRow {
            n,
            value: exp.check_pell_identity(n).ok().map(|v| v.to_string()),
            determinant: exp.determinant_identity(n).ok(),
        })
        .collect()
}

pub fn cfrac_json<K: Field>(exp: &CFracExpansion<K>, upto: usize) -> Value {
    let rows = identity_rows(exp, upto);
    let states: Vec<Value> = (0..=rows.len())
        .filter_map(|i| exp.state(i).ok())
        .map(|s| json!({ "index": s.index, "m": s.m.to_string(), "n": s.n.to_string() }))
        .collect();
    json!({
        "command": "cfrac",
        "d_poly": exp.d_poly().to_string(),
        "period": period_json(exp.period()),
        "a0": exp.a0().to_string(),
        "quotients": strings(exp.quotients()),
        "periodic": exp.periodic_quotients().map(strings),
        "states": states,
        "identities": rows.iter().map(|r| json!({
            "n": r.n,
            "value": r.value,
            "holds": r.value.is_some(),
            "determinant": r.determinant,
        })).collect::<Vec<_>>(),
        "verdict": Value::Null,
        "witness": Value::Null,
        "reason": Value::Null,
    })
}

pub fn cfrac_text<K: Field>(exp: &CFracExpansion<K>, upto: usize, max_steps: usize) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "D = {}", exp.d_poly());
    let _ = writeln!(s, "a0 = {}", exp.a0());
    match exp.period() {
        Some(p) => {
            let _ = writeln!(s, "period: r = {} (from index {})", p.length, p.start);
        }
        None => {
            let _ = writeln!(s, "period: none within {max_steps} steps");
        }
    }
    let _ = writeln!(s, "quotients: {}", quotient_line(exp));
    let rows = identity_rows(exp, upto);
    let _ = writeln!(s, "states:");
    for i in 0..=rows.len() {
        if let Ok(st) = exp.state(i) {
            let _ = writeln!(s, "  {i:>3}  M = {}  N = {}", st.m, st.n);
        }
    }
    let ok = rows.iter().filter(|r| r.value.is_some()).count();
    let det = rows.iter().filter(|r| r.determinant.is_some()).count();
    let _ = writeln!(s, "identity H^2 - D K^2 = (-1)^(n-1) N_(n+1): {ok}/{} exact", rows.len());
    let _ = writeln!(s, "determinant H_n K_(n-1) - K_n H_(n-1) = (-1)^(n-1): {det}/{} exact", rows.len());
    s
}

pub fn solve_json<K: PellScalar>(
    d: &Poly<K>,
    exp: Option<&CFracExpansion<K>>,
    v: &PellVerdict<K>,
    witnesses: &[(Poly<K>, Poly<K>)],
) -> Value {
    json!({
        "command": "solve",
        "d_poly": d.to_string(),
        "ring": v.ring.to_string(),
        "sign": v.sign.value(),
        "period": period_json(v.period),
        "quotients": exp.map(|e| strings(e.quotients())).unwrap_or_default(),
        "verdict": v.kind.to_string(),
        "witness": if witnesses.is_empty() { Value::Null } else { witness_json(witnesses) },
        "reason": v.reason.to_string(),
        "power": v.power,
        "bounds": json!({
            "max_steps": v.bounds.max_steps,
            "max_power": v.bounds.max_power,
            "search": v.bounds.search.map(|b| json!({ "max_deg_q": b.max_deg_q, "coeff_bound": b.coeff_bound })),
        }),
    })
}

pub fn solve_text<K: PellScalar>(
    d: &Poly<K>,
    exp: Option<&CFracExpansion<K>>,
    v: &PellVerdict<K>,
    witnesses: &[(Poly<K>, Poly<K>)],
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "D = {}    ring {}    P^2 - D Q^2 = {}", d, v.ring, v.sign.value());
    if let Some(e) = exp {
        let _ = writeln!(s, "quotients: {}", quotient_line(e));
    }
    match v.period {
        Some(p) => {
            let _ = writeln!(s, "period: r = {}", p.length);
        }
        None if exp.is_some() => {
            let _ = writeln!(s, "period: none within {} steps", v.bounds.max_steps);
        }
        None => {}
    }
    let _ = writeln!(s, "verdict: {} ({})", v.kind, v.reason);
    for (p, q) in witnesses {
        let _ = writeln!(s, "(P, Q) = ({p}, {q})");
    }
    if let Some(b) = v.bounds.search {
        let _ = writeln!(s, "searched deg Q <= {}, |coefficients| <= {}", b.max_deg_q, b.coeff_bound);
    }
    s
}
