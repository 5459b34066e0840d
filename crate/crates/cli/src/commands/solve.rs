use pellkit_core::cfrac::cfrac_expand;
use pellkit_core::expr::to_gaussian;
use pellkit_core::poly::Poly;
use pellkit_core::solver::{
    mason_no_solution_test, solution_sequence, solve, solve_with_expansion, PellScalar, Ring, SearchBox,
    SolveOptions, VerdictKind,
};
use pellkit_core::quad_ext::validate_radicand;

use super::{core_error, exit, read_radicand, to_json, Outcome, Radicand};
use crate::args::{Format, SolveArgs};
use crate::report::{solve_json, solve_text};

pub(crate) fn options(max_steps: usize, max_power: u32, box_deg: usize, box_bound: u32) -> Result<SolveOptions, Outcome> {
    let search = SearchBox::new(box_deg, box_bound).map_err(core_error)?;
    Ok(SolveOptions { max_steps, max_power, search, ..SolveOptions::default() })
}

fn run_over<K: PellScalar>(d: &Poly<K>, args: &SolveArgs, opts: &SolveOptions) -> Result<Outcome, pellkit_core::Error> {
    let ring: Ring = args.ring.into();
    let sign = args.sign.into();
    let (verdict, exp) = if mason_no_solution_test(d)? {
        (solve(d, ring, sign, opts)?, None)
    } else {
        validate_radicand(d)?;
        let exp = cfrac_expand(d, opts.max_steps)?;
        (solve_with_expansion(&exp, ring, sign, opts)?, Some(exp))
    };
    let witnesses = match &verdict.witness {
        Some(w) => solution_sequence(d, w, sign, args.count)?,
        None => Vec::new(),
    };
    let stdout = match args.format {
        Format::Json => to_json(&solve_json(d, exp.as_ref(), &verdict, &witnesses)),
        Format::Text => solve_text(d, exp.as_ref(), &verdict, &witnesses),
    };
    let code = match verdict.kind {
        VerdictKind::Solution => exit::OK,
        VerdictKind::ProvedNone => exit::PROVED_NONE,
        VerdictKind::NoneWithinBounds => exit::NONE_WITHIN_BOUNDS,
    };
    Ok(Outcome { code, stdout, stderr: String::new() })
}

pub fn run(args: &SolveArgs) -> Outcome {
    if args.count == 0 {
        return Outcome::fail(exit::INVALID_INPUT, "--count must be at least 1");
    }
    let opts = match options(args.steps.max_steps, args.max_power, args.search.box_deg, args.search.box_bound) {
        Ok(o) => o,
        Err(o) => return o,
    };
    let d = match read_radicand(&args.poly) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let result = match (Ring::from(args.ring), d) {
        (Ring::Zi, Radicand::Rational(d)) => run_over(&to_gaussian(&d), args, &opts),
        (Ring::Zi, Radicand::Gaussian(d)) => run_over(&d, args, &opts),
        (_, Radicand::Rational(d)) => run_over(&d, args, &opts),
        (ring, Radicand::Gaussian(_)) => {
            return Outcome::fail(exit::INVALID_INPUT, format!("ring {ring} needs rational coefficients"))
        }
    };
    result.unwrap_or_else(core_error)
}
