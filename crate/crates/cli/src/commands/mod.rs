mod cfrac;
mod solve;
mod sweep;
mod verify;

use pellkit_core::arith::{GaussRat, Rat};
use pellkit_core::expr::{parse_poly, to_rational};
use pellkit_core::poly::Poly;

use crate::args::{Cli, Command};

pub use sweep::{sweep_rows, SweepRow};

pub mod exit {
    pub const OK: i32 = 0;
    /// A verification suite found a counterexample, or an internal check tripped.
    pub const FAILURE: i32 = 1;
    pub const INVALID_INPUT: i32 = 2;
    pub const NO_PERIOD: i32 = 3;
    pub const PROVED_NONE: i32 = 4;
    pub const NONE_WITHIN_BOUNDS: i32 = 5;
}

/// What a command produced; `main` prints it and exits with `code`.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome { code: exit::OK, stdout, stderr: String::new() }
    }

    pub fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

fn core_error(e: pellkit_core::Error) -> Outcome {
    use pellkit_core::Error as E;
    let code = match e {
        E::Internal(_) | E::NotASolution { .. } => exit::FAILURE,
        _ => exit::INVALID_INPUT,
    };
    Outcome::fail(code, e)
}

/// A parsed radicand, kept over `Q` whenever its coefficients allow.
enum Radicand {
    Rational(Poly<Rat>),
    Gaussian(Poly<GaussRat>),
}

fn read_radicand(text: &str) -> Result<Radicand, Outcome> {
    let p = parse_poly(text).map_err(|e| Outcome::fail(exit::INVALID_INPUT, e))?;
    Ok(match to_rational(&p) {
        Some(r) => Radicand::Rational(r),
        None => Radicand::Gaussian(p),
    })
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Cfrac(a) => cfrac::run(&a),
        Command::Solve(a) => solve::run(&a),
        Command::Sweep(a) => sweep::run(&a),
        Command::Verify(a) => verify::run(&a),
    }
}

pub(crate) fn to_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values built from strings and integers");
    s.push('\n');
    s
}
