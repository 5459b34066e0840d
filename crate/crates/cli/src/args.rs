use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pellkit_core::cfrac::DEFAULT_MAX_STEPS;
use pellkit_core::solver::{Ring, Sign};

#[derive(Parser, Debug)]
#[command(name = "pellkit", version, about = "Exact solver for polynomial Pell equations P^2 - D Q^2 = ±1")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Continued-fraction expansion of sqrt(D) with identity checks
    Cfrac(CfracArgs),
    /// Decide P^2 - D Q^2 = ±1 over Z, Q or Z[i]
    Solve(SolveArgs),
    /// Tabulate a family of radicands
    Sweep(SweepArgs),
    /// Run a built-in property suite
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct StepArgs {
    /// Expansion step bound [env: PELLKIT_MAX_STEPS, default 64]
    #[arg(long, env = "PELLKIT_MAX_STEPS", default_value_t = DEFAULT_MAX_STEPS, hide_env = true, hide_default_value = true)]
    pub max_steps: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingArg {
    #[value(name = "Z")]
    Z,
    #[value(name = "Q")]
    Q,
    #[value(name = "Zi")]
    Zi,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::Z => Ring::Z,
            RingArg::Q => Ring::Q,
            RingArg::Zi => Ring::Zi,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignArg {
    Neg,
    Pos,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Neg => Sign::Neg,
            SignArg::Pos => Sign::Pos,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepSign {
    Neg,
    Pos,
    Both,
}

#[derive(Args, Debug)]
pub struct CfracArgs {
    /// Radicand, e.g. "X^4+3"
    pub poly: String,
    #[command(flatten)]
    pub steps: StepArgs,
    /// Check the convergent identities for n = 0..=N
    #[arg(long, default_value_t = 12)]
    pub identities: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BoxArgs {
    /// Largest deg Q tried by the fallback search
    #[arg(long, default_value_t = 3)]
    pub box_deg: usize,
    /// Coefficient bound (per real/imaginary part) of the fallback search
    #[arg(long, default_value_t = 4)]
    pub box_bound: u32,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Radicand, e.g. "X^2+1"
    pub poly: String,
    #[arg(long, value_enum, default_value_t = SignArg::Neg)]
    pub sign: SignArg,
    #[arg(long, value_enum, default_value_t = RingArg::Z)]
    pub ring: RingArg,
    /// Number of solutions to list on success
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[command(flatten)]
    pub steps: StepArgs,
    /// Largest power of the fundamental unit tried
    #[arg(long, default_value_t = 12)]
    pub max_power: u32,
    #[command(flatten)]
    pub search: BoxArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// X^(2k) + d
    #[value(name = "xk_d")]
    XkD,
    /// X^(2k) + aX + b
    #[value(name = "xk_axb")]
    XkAxb,
    /// X^(2k) + aX^k + b
    #[value(name = "xk_axkb")]
    XkAxkb,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Range `lo..hi` (inclusive) or a single value
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub k: String,
    /// Constant term range for xk_d; 0 is skipped
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    /// Coefficient range of X (xk_axb) or X^k (xk_axkb)
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Constant term range for xk_axb and xk_axkb
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, value_enum, default_value_t = SweepSign::Both)]
    pub sign: SweepSign,
    #[arg(long, value_enum, default_value_t = RingArg::Z)]
    pub ring: RingArg,
    #[command(flatten)]
    pub steps: StepArgs,
    #[arg(long, default_value_t = 12)]
    pub max_power: u32,
    #[arg(long, default_value_t = 2)]
    pub box_deg: usize,
    #[arg(long, default_value_t = 4)]
    pub box_bound: u32,
    /// Worker threads; rows are merged in parameter order regardless
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    /// Write the table here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Mason,
    Oracle,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Largest convergent index for the identity suite
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    /// Oracle search box degree
    #[arg(long, default_value_t = 3)]
    pub box_deg: usize,
    /// Oracle search box coefficient bound
    #[arg(long, default_value_t = 6)]
    pub box_bound: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Parses `lo..hi` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<Vec<i64>, String> {
    let bad = || format!("invalid range '{s}', expected lo..hi or an integer");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.trim().parse::<i64>().map_err(|_| bad())?, hi.trim().parse::<i64>().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse::<i64>().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range '{s}'"));
    }
    Ok((lo..=hi).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-2..1").unwrap(), vec![-2, -1, 0, 1]);
        assert_eq!(parse_range("3").unwrap(), vec![3]);
        assert!(parse_range("2..1").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
