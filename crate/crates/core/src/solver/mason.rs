//! Stothers–Mason bounds and the `Z[i]` reducibility test for `X^2 + d`.

use num_bigint::BigInt;

use crate::arith::{gauss_sqrt, Field, GaussInt};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// True when `n0(D) <= deg D / 2`, in which case `P^2 - D Q^2 = c` has no
/// solution with `Q != 0` for any nonzero constant `c`, even over `C[X]`.
///
/// Constant `D` always returns false: there `P, Q` may be constants.
pub fn mason_no_solution_test<K: Field>(d: &Poly<K>) -> Result<bool> {
    let deg = d.degree().ok_or(Error::Domain("radical bound of the zero polynomial"))?;
    if deg == 0 {
        return Ok(false);
    }
    let (_, n0) = d.radical()?;
    Ok(2 * n0 <= deg)
}

/// Degree count behind the radical bound for `A + B = C` with
/// `A = P^2`, `B = -D Q^2`, `C = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MasonReport {
    /// `max(deg A, deg B, deg C)`.
    pub lhs: usize,
    /// `n0(ABC)`.
    pub rhs: usize,
    /// `lhs < rhs`.
    pub holds: bool,
}

pub fn mason_inequality_check<K: Field>(p: &Poly<K>, q: &Poly<K>, d: &Poly<K>) -> Result<MasonReport> {
    let a = p * p;
    let b = -(d * &(q * q));
    let c = &a + &b;
    let not_solution = || Error::NotASolution { p: p.to_string(), q: q.to_string(), d: d.to_string() };
    if q.is_zero() || !c.is_constant() || c.is_zero() {
        return Err(not_solution());
    }
    let unit = c.coeff(0);
    if unit != K::one() && unit != -K::one() {
        return Err(not_solution());
    }
    if !a.gcd(&b)?.is_one() {
        return Err(Error::Internal(format!("P^2 and D Q^2 share a factor for ({p}, {q})")));
    }
    let lhs = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    let (_, rhs) = (&a * &b).radical()?;
    Ok(MasonReport { lhs, rhs, holds: lhs < rhs })
}

/// `α` with `d = -α^2`, i.e. `X^2 + d = (X - α)(X + α)` over `Z[i]`.
pub fn is_neg_square_gauss(d: &BigInt) -> Option<GaussInt> {
    gauss_sqrt(&GaussInt::new(-d, 0))
}
