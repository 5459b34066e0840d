use num_bigint::BigInt;
use pellkit_core::arith::Rat;
use pellkit_core::cfrac::{cfrac_expand, Period};
use pellkit_core::expr::to_gaussian;
use pellkit_core::poly::Poly;
use pellkit_core::solver::{
    mason_no_solution_test, solve, solve_with_expansion, FamilyKind, PellScalar, PellVerdict, Ring, Sign,
    SolveOptions, VerdictKind,
};
use pellkit_core::quad_ext::validate_radicand;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::solve::options;
use super::{exit, to_json, Outcome};
use crate::args::{parse_range, Family, SweepArgs, SweepSign, TableFormat};
use crate::report::period_json;

/// One sign's outcome in a sweep row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepCell {
    pub verdict: VerdictKind,
    pub reason: String,
    pub witness: Option<(String, String)>,
}

impl SweepCell {
    fn from_verdict<K: PellScalar>(v: &PellVerdict<K>) -> Self {
        SweepCell {
            verdict: v.kind,
            reason: v.reason.to_string(),
            witness: v.witness.as_ref().map(|(p, q)| (p.to_string(), q.to_string())),
        }
    }

    pub fn solvable(&self) -> &'static str {
        match self.verdict {
            VerdictKind::Solution => "true",
            VerdictKind::ProvedNone => "false",
            VerdictKind::NoneWithinBounds => "unknown",
        }
    }

    fn json(&self) -> Value {
        json!({
            "solvable": self.solvable(),
            "verdict": self.verdict.to_string(),
            "reason": self.reason,
            "witness": self.witness.as_ref().map(|(p, q)| json!([{ "p": p, "q": q }])),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub family: Family,
    pub k: i64,
    pub d: Option<i64>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub d_poly: String,
    /// False when the radical bound settled the row before any expansion.
    pub expanded: bool,
    pub period: Option<Period>,
    pub neg: Option<SweepCell>,
    pub pos: Option<SweepCell>,
    /// Set when the radicand is rejected (e.g. not squarefree).
    pub error: Option<String>,
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::XkD => "xk_d",
        Family::XkAxb => "xk_axb",
        Family::XkAxkb => "xk_axkb",
    }
}

fn radicand(family: Family, k: usize, d: Option<i64>, a: Option<i64>, b: Option<i64>) -> pellkit_core::Result<Poly<Rat>> {
    let big = |v: Option<i64>| BigInt::from(v.unwrap_or(0));
    match family {
        Family::XkD => FamilyKind::MiddleTerm.poly(k, &BigInt::from(0), &big(d)),
        Family::XkAxb => FamilyKind::LinearTerm.poly(k, &big(a), &big(b)),
        Family::XkAxkb => FamilyKind::MiddleTerm.poly(k, &big(a), &big(b)),
    }
}

type Cells = Vec<(Sign, SweepCell)>;

fn fill<K: PellScalar>(d: &Poly<K>, ring: Ring, signs: &[Sign], opts: &SolveOptions) -> pellkit_core::Result<(Option<Option<Period>>, Cells)> {
    let mut cells = Vec::new();
    if mason_no_solution_test(d)? {
        for &s in signs {
            cells.push((s, SweepCell::from_verdict(&solve(d, ring, s, opts)?)));
        }
        return Ok((None, cells));
    }
    validate_radicand(d)?;
    let exp = cfrac_expand(d, opts.max_steps)?;
    for &s in signs {
        cells.push((s, SweepCell::from_verdict(&solve_with_expansion(&exp, ring, s, opts)?)));
    }
    Ok((Some(exp.period()), cells))
}

type Params = (i64, Option<i64>, Option<i64>, Option<i64>);

fn compute_row(family: Family, (k, d, a, b): Params, ring: Ring, signs: &[Sign], opts: &SolveOptions) -> SweepRow {
    let mut row = SweepRow {
        family,
        k,
        d,
        a,
        b,
        d_poly: String::new(),
        expanded: false,
        period: None,
        neg: None,
        pos: None,
        error: None,
    };
    let poly = match usize::try_from(k).map_err(|_| pellkit_core::Error::Domain("k must be positive")).and_then(|k| radicand(family, k, d, a, b)) {
        Ok(p) => p,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.d_poly = poly.to_string();
    let filled = if ring == Ring::Zi {
        fill(&to_gaussian(&poly), ring, signs, opts)
    } else {
        fill(&poly, ring, signs, opts)
    };
    match filled {
        Ok((period, cells)) => {
            row.expanded = period.is_some();
            row.period = period.flatten();
            for (sign, cell) in cells {
                match sign {
                    Sign::Neg => row.neg = Some(cell),
                    Sign::Pos => row.pos = Some(cell),
                }
            }
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// Rows in lexicographic parameter order, computed on `jobs` threads.
pub fn sweep_rows(args: &SweepArgs) -> Result<Vec<SweepRow>, String> {
    let ks = parse_range(&args.k)?;
    let need = |v: &Option<String>, name: &str| -> Result<Vec<i64>, String> {
        parse_range(v.as_deref().ok_or_else(|| format!("--{name} is required for this family"))?)
    };
    let mut params: Vec<Params> = Vec::new();
    match args.family {
        Family::XkD => {
            let ds = need(&args.d, "d")?;
            for &k in &ks {
                params.extend(ds.iter().filter(|&&d| d != 0).map(|&d| (k, Some(d), None, None)));
            }
        }
        Family::XkAxb | Family::XkAxkb => {
            let (as_, bs) = (need(&args.a, "a")?, need(&args.b, "b")?);
            for &k in &ks {
                for &a in &as_ {
                    params.extend(bs.iter().map(|&b| (k, None, Some(a), Some(b))));
                }
            }
        }
    }
    if params.is_empty() {
        return Err("the requested ranges contain no radicand".into());
    }
    let signs: Vec<Sign> = match args.sign {
        SweepSign::Neg => vec![Sign::Neg],
        SweepSign::Pos => vec![Sign::Pos],
        SweepSign::Both => vec![Sign::Neg, Sign::Pos],
    };
    let opts = options(args.steps.max_steps, args.max_power, args.box_deg, args.box_bound)
        .map_err(|o| o.stderr.trim_end().to_string())?;
    let ring = Ring::from(args.ring);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| e.to_string())?;
    Ok(pool.install(|| {
        params
            .par_iter()
            .map(|&p| compute_row(args.family, p, ring, &signs, &opts))
            .collect()
    }))
}

const HEADER: [&str; 19] = [
    "family", "k", "d", "a", "b", "d_poly", "period", "neg_solvable", "neg_verdict", "neg_reason", "neg_p", "neg_q",
    "pos_solvable", "pos_verdict", "pos_reason", "pos_p", "pos_q", "max_steps", "error",
];

fn opt(v: Option<i64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn period_cell(r: &SweepRow, max_steps: usize) -> String {
    match r.period {
        Some(p) => p.length.to_string(),
        None if r.expanded => format!(">{max_steps}"),
        None => String::new(),
    }
}

fn cell_fields(c: &Option<SweepCell>) -> [String; 5] {
    match c {
        Some(c) => {
            let (p, q) = c.witness.clone().unwrap_or_default();
            [c.solvable().into(), c.verdict.to_string(), c.reason.clone(), p, q]
        }
        None => Default::default(),
    }
}

pub fn to_csv(rows: &[SweepRow], max_steps: usize) -> Result<String, String> {
    let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::Always).from_writer(Vec::new());
    w.write_record(HEADER).map_err(|e| e.to_string())?;
    for r in rows {
        let mut rec = vec![
            family_name(r.family).to_string(),
            r.k.to_string(),
            opt(r.d),
            opt(r.a),
            opt(r.b),
            r.d_poly.clone(),
            period_cell(r, max_steps),
        ];
        rec.extend(cell_fields(&r.neg));
        rec.extend(cell_fields(&r.pos));
        rec.push(max_steps.to_string());
        rec.push(r.error.clone().unwrap_or_default());
        w.write_record(&rec).map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

pub fn to_json_rows(rows: &[SweepRow], max_steps: usize) -> Value {
    json!({
        "command": "sweep",
        "max_steps": max_steps,
        "rows": rows.iter().map(|r| json!({
            "family": family_name(r.family),
            "k": r.k,
            "d": r.d,
            "a": r.a,
            "b": r.b,
            "d_poly": r.d_poly,
            "period": period_json(r.period),
            "expanded": r.expanded,
            "neg": r.neg.as_ref().map(SweepCell::json),
            "pos": r.pos.as_ref().map(SweepCell::json),
            "error": r.error,
        })).collect::<Vec<_>>(),
    })
}

pub fn run(args: &SweepArgs) -> Outcome {
    let rows = match sweep_rows(args) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(exit::INVALID_INPUT, e),
    };
    let steps = args.steps.max_steps;
    let text = match args.format {
        TableFormat::Csv => match to_csv(&rows, steps) {
            Ok(t) => t,
            Err(e) => return Outcome::fail(exit::FAILURE, e),
        },
        TableFormat::Json => to_json(&to_json_rows(&rows, steps)),
    };
    match &args.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(exit::INVALID_INPUT, format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome::ok(text),
    }
}
