use pellkit_core::arith::Field;
use pellkit_core::cfrac::cfrac_expand;
use pellkit_core::poly::Poly;

use super::{core_error, exit, read_radicand, to_json, Outcome, Radicand};
use crate::args::{CfracArgs, Format};
use crate::report::{cfrac_json, cfrac_text};

fn expand<K: Field>(d: &Poly<K>, args: &CfracArgs) -> Outcome {
    let steps = args.steps.max_steps;
    let exp = match cfrac_expand(d, steps) {
        Ok(e) => e,
        Err(e) => return core_error(e),
    };
    let stdout = match args.format {
        Format::Json => to_json(&cfrac_json(&exp, args.identities)),
        Format::Text => cfrac_text(&exp, args.identities, steps),
    };
    match exp.period() {
        Some(_) => Outcome::ok(stdout),
        None => Outcome {
            code: exit::NO_PERIOD,
            stdout,
            stderr: format!("no period within {steps} steps\n"),
        },
    }
}

pub fn run(args: &CfracArgs) -> Outcome {
    match read_radicand(&args.poly) {
        Ok(Radicand::Rational(d)) => expand(&d, args),
        Ok(Radicand::Gaussian(d)) => expand(&d, args),
        Err(o) => o,
    }
}
