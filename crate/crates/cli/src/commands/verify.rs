use num_bigint::BigInt;
use pellkit_core::arith::{GaussRat, Rat};
use pellkit_core::cfrac::cfrac_expand;
use pellkit_core::expr::to_gaussian;
use pellkit_core::poly::Poly;
use pellkit_core::solver::{
    brute_force_search, generate_solutions, mason_inequality_check, mason_no_solution_test, solution_sequence, solve,
    Ring, SearchBox, Sign, SolveOptions, VerdictKind, DEFAULT_CANDIDATE_CAP,
};
use serde_json::json;

use super::{exit, to_json, Outcome};
use crate::args::{Format, Suite, VerifyArgs};

/// Radicands exercised by the identity suite.
pub const IDENTITY_RADICANDS: &[&[i64]] = &[
    &[1, 0, 1],
    &[2, 0, 1],
    &[3, 0, 1],
    &[-2, 0, 1],
    &[3, 0, 0, 0, 1],
    &[1, 0, 0, 0, 1],
    &[1, 1, 1],
    &[1, 0, 0, 0, 0, 0, 1],
    &[1, 0, 1, 0, 1],
    &[2, 0, 1, 0, 1],
    &[2, 1, 1],
    &[1, 1, 0, 0, 1],
    &[7, 1, 0, 3, 1],
];

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn x2k_plus(k: usize, d: i64) -> Poly<Rat> {
    let mut c = vec![0; 2 * k + 1];
    c[0] = d;
    c[2 * k] = 1;
    Poly::from_ints(&c)
}

fn identities(max_n: usize, t: &mut Tally) {
    for c in IDENTITY_RADICANDS {
        let d = Poly::<Rat>::from_ints(c);
        let exp = match cfrac_expand(&d, max_n + 2) {
            Ok(e) => e,
            Err(e) => {
                t.check(false, || format!("D = {d}: {e}"));
                continue;
            }
        };
        for n in 0..=max_n {
            let r = exp.check_pell_identity(n);
            t.check(r.is_ok(), || format!("D = {d}, n = {n}: {}", r.unwrap_err()));
            let r = exp.determinant_identity(n);
            t.check(r.is_ok(), || format!("D = {d}, n = {n} determinant: {}", r.unwrap_err()));
        }
    }
}

fn mason(t: &mut Tally) {
    let opts = SolveOptions::default();
    for k in 1..=3 {
        match generate_solutions(k, &BigInt::from(1), 4) {
            Ok(sols) => {
                let d = to_surd(&x2k_plus(k, 1));
                for s in sols {
                    let r = mason_inequality_check(&s.p, &s.q, &d);
                    t.check(r.as_ref().is_ok_and(|r| r.holds), || format!("k = {k}, exponent {}: {r:?}", s.exponent));
                }
            }
            Err(e) => t.check(false, || format!("generate_solutions(k = {k}): {e}")),
        }
    }
    for k in 1..=2 {
        for dv in (-10..=10).filter(|&d| d != 0) {
            let d = x2k_plus(k, dv);
            for sign in [Sign::Neg, Sign::Pos] {
                let Ok(v) = solve(&d, Ring::Z, sign, &opts) else {
                    t.check(false, || format!("solve failed for D = {d}"));
                    continue;
                };
                let Some(w) = v.witness else { continue };
                for (p, q) in solution_sequence(&d, &w, sign, 3).unwrap_or_default() {
                    let r = mason_inequality_check(&p, &q, &d);
                    t.check(r.as_ref().is_ok_and(|r| r.holds), || format!("D = {d}, ({p}, {q}): {r:?}"));
                }
            }
        }
    }
    let bx = SearchBox { max_deg_q: 3, coeff_bound: 6 };
    for d in [Poly::<Rat>::from_ints(&[0, 0, 0, 0, 1]), Poly::from_ints(&[1, 0, 2, 0, 1])] {
        t.check(mason_no_solution_test(&d).unwrap_or(false), || format!("radical bound does not fire for {d}"));
        for sign in [Sign::Neg, Sign::Pos] {
            let hits = brute_force_search(&d, Ring::Z, bx, sign, DEFAULT_CANDIDATE_CAP);
            t.check(hits.as_ref().is_ok_and(Vec::is_empty), || format!("search finds {hits:?} for {d}"));
        }
    }
}

fn to_surd(p: &Poly<Rat>) -> Poly<pellkit_core::quad_ext::SurdRat> {
    p.map(|c| pellkit_core::quad_ext::SurdRat::rational(c.clone()))
}

fn oracle(bx: SearchBox, t: &mut Tally) {
    let opts = SolveOptions::default();
    for k in 1..=2 {
        for dv in (-10..=10).filter(|&d| d != 0) {
            let d = x2k_plus(k, dv);
            for sign in [Sign::Neg, Sign::Pos] {
                let v = solve(&d, Ring::Z, sign, &opts);
                let hits = brute_force_search(&d, Ring::Z, bx, sign, DEFAULT_CANDIDATE_CAP);
                let (Ok(v), Ok(hits)) = (v, hits) else {
                    t.check(false, || format!("D = {d}, sign {sign}: solver or search failed"));
                    continue;
                };
                let solved = v.kind == VerdictKind::Solution;
                t.check(solved == !hits.is_empty(), || {
                    format!("D = {d}, sign {sign}: solver {} vs {} search hits", v.kind, hits.len())
                });
            }
        }
    }
    // Z[i] at a smaller box
    let gbox = SearchBox { max_deg_q: 2, coeff_bound: 2 };
    for dv in [-5, -4, -3, -1, 3, 4, 5] {
        let d: Poly<GaussRat> = to_gaussian(&x2k_plus(1, dv));
        let v = solve(&d, Ring::Zi, Sign::Neg, &opts);
        let hits = brute_force_search(&d, Ring::Zi, gbox, Sign::Neg, DEFAULT_CANDIDATE_CAP);
        let (Ok(v), Ok(hits)) = (v, hits) else {
            t.check(false, || format!("D = {d} over Z[i]: solver or search failed"));
            continue;
        };
        t.check((v.kind == VerdictKind::Solution) == !hits.is_empty(), || {
            format!("D = {d} over Z[i]: solver {} vs {} search hits", v.kind, hits.len())
        });
    }
}

pub fn run(args: &VerifyArgs) -> Outcome {
    let mut t = Tally::default();
    let name = match args.suite {
        Suite::Identities => {
            identities(args.max_n, &mut t);
            "identities"
        }
        Suite::Mason => {
            mason(&mut t);
            "mason"
        }
        Suite::Oracle => {
            let bx = match SearchBox::new(args.box_deg, args.box_bound) {
                Ok(b) => b,
                Err(e) => return Outcome::fail(exit::INVALID_INPUT, e),
            };
            oracle(bx, &mut t);
            "oracle"
        }
    };
    let passed = t.failures.is_empty();
    let stdout = match args.format {
        Format::Json => to_json(&json!({
            "command": "verify",
            "suite": name,
            "checks": t.checks,
            "failures": t.failures,
            "passed": passed,
        })),
        Format::Text => {
            let mut s = format!("{name}: {} checks, {} failures\n", t.checks, t.failures.len());
            for f in &t.failures {
                s.push_str(&format!("  FAIL {f}\n"));
            }
            s
        }
    };
    Outcome { code: if passed { exit::OK } else { exit::FAILURE }, stdout, stderr: String::new() }
}
