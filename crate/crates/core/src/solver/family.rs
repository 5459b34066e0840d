//! The families `X^(2k) + d`, `X^(2k) + aX + b` and `X^(2k) + aX^k + b`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::pipeline::solve_with_expansion;
use super::search::brute_force_search;
use super::types::{PellVerdict, Ring, Sign, SolveOptions, VerdictKind};
use crate::arith::Rat;
use crate::cfrac::{cfrac_expand, Period};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::quad_ext::{fundamental_solution_family, validate_radicand, SurdRat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedSolution {
    /// Odd exponent `2n - 1` applied to the fundamental solution.
    pub exponent: u32,
    pub p: Poly<SurdRat>,
    pub q: Poly<SurdRat>,
    pub norm: SurdRat,
    /// All coefficients of `P` and `Q` are rational integers.
    pub integral: bool,
}

/// Odd powers `(X^k + sqrt(X^(2k) + d)) / sqrt(d)` raised to `2n - 1` for
/// `n = 1..=count`, each checked to have norm `-1`.
pub fn generate_solutions(k: usize, d: &BigInt, count: usize) -> Result<Vec<GeneratedSolution>> {
    if count == 0 {
        return Err(Error::Domain("count must be positive"));
    }
    let base = fundamental_solution_family(k, d)?;
    let minus_one = Poly::constant(-SurdRat::one());
    let mut out = Vec::with_capacity(count);
    for n in 1..=count {
        let exponent = u32::try_from(2 * n - 1).map_err(|_| Error::Domain("count too large"))?;
        let e = base.pow(exponent)?;
        let norm = e.norm();
        if norm != minus_one {
            return Err(Error::Internal(format!("power {exponent} has norm {norm}")));
        }
        let integral = e.p().coeffs().iter().chain(e.q().coeffs()).all(SurdRat::is_integer);
        let (p, q) = e.into_parts();
        out.push(GeneratedSolution { exponent, p, q, norm: -SurdRat::one(), integral });
    }
    Ok(out)
}

/// `2^(2n-2) / d^((2n-1)/2)`, the coefficient of `X^(k(2n-1))` in `P_{2n-1}`.
pub fn leading_coeff(n: u32, d: &BigInt) -> Result<SurdRat> {
    if d.is_zero() {
        return Err(Error::Domain("d must be nonzero"));
    }
    if n == 0 {
        return Err(Error::Domain("n must be positive"));
    }
    // 2^(2n-2) / (d^(n-1) sqrt(d)) = 2^(2n-2) / d^n * sqrt(d)
    let num = BigInt::one() << (2 * n as usize - 2);
    SurdRat::new(Rat::zero(), Rat::new(num, d.pow(n)), d.clone())
}

pub fn leading_coeff_is_integral(n: u32, d: &BigInt) -> Result<bool> {
    Ok(leading_coeff(n, d)?.is_integer())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `X^(2k) + aX + b`.
    LinearTerm,
    /// `X^(2k) + aX^k + b`.
    MiddleTerm,
}

impl FamilyKind {
    pub fn poly(self, k: usize, a: &BigInt, b: &BigInt) -> Result<Poly<Rat>> {
        if k == 0 {
            return Err(Error::Domain("k must be positive"));
        }
        let at = match self {
            FamilyKind::LinearTerm => 1,
            FamilyKind::MiddleTerm => k,
        };
        let mut coeffs = vec![Rat::zero(); 2 * k + 1];
        coeffs[2 * k] = Rat::one();
        coeffs[at] += Rat::from_integer(a.clone());
        coeffs[0] += Rat::from_integer(b.clone());
        Ok(Poly::from_coeffs(coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub d_poly: Poly<Rat>,
    pub period: Option<Period>,
    /// `D - 1` is a perfect square, so `(sqrt(D - 1), 1)` solves the negative
    /// equation outright; the family argument does not apply.
    pub overlap: bool,
    /// Negative equation over `Z`.
    pub verdict: PellVerdict<Rat>,
    /// Bounded search over `Z` in `opts.search`.
    pub oracle: Vec<(Poly<Rat>, Poly<Rat>)>,
    /// Whether the search outcome is consistent with the verdict.
    pub agrees: bool,
}

/// Runs the expansion and the negative-equation solver over `Z` on one
/// family member, cross-checked by bounded search.
pub fn family_no_solution_check(
    kind: FamilyKind,
    k: usize,
    a: &BigInt,
    b: &BigInt,
    opts: &SolveOptions,
) -> Result<FamilyReport> {
    let d = kind.poly(k, a, b)?;
    validate_radicand(&d)?;
    let overlap = (&d - &Poly::one()).sqrt_exact().is_some();
    let exp = cfrac_expand(&d, opts.max_steps)?;
    let period = exp.period();
    let verdict = solve_with_expansion(&exp, Ring::Z, Sign::Neg, opts)?;
    let oracle = brute_force_search(&d, Ring::Z, opts.search, Sign::Neg, opts.candidate_cap)?;
    let agrees = match verdict.kind {
        VerdictKind::Solution => !oracle.is_empty(),
        // a solution outside the box is possible only for Solution verdicts
        VerdictKind::ProvedNone | VerdictKind::NoneWithinBounds => oracle.is_empty(),
    };
    Ok(FamilyReport { d_poly: d, period, overlap, verdict, oracle, agrees })
}
