//! Truncated Laurent series at infinity, used to extract polynomial parts of
//! `(M + sqrt(D)) / N`.

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// `sum_j coeffs[j] * X^(top - j) + O(X^(top - coeffs.len()))`.
///
/// Coefficients below the truncation are unknown and never read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent<K> {
    top: i64,
    coeffs: Vec<K>,
}

/// The negative-exponent part of an expansion: coefficients of
/// `X^center, X^(center-1), ..., X^(center-order+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentTail<K> {
    pub center: i64,
    pub coeffs: Vec<K>,
    pub order: usize,
}

impl<K: Field> Laurent<K> {
    /// Embeds `p`, keeping every exponent down to `lowest` (inclusive).
    pub fn from_poly(p: &Poly<K>, lowest: i64) -> Self {
        let top = p.degree().map_or(lowest, |d| (d as i64).max(lowest));
        let coeffs = (lowest..=top)
            .rev()
            .map(|e| if e < 0 { K::zero() } else { p.coeff(e as usize) })
            .collect();
        Laurent { top, coeffs }
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    /// Lowest exponent whose coefficient is known.
    pub fn lowest_known(&self) -> i64 {
        self.top - self.coeffs.len() as i64 + 1
    }

    pub fn coeff(&self, e: i64) -> Option<K> {
        if e > self.top {
            return Some(K::zero());
        }
        self.coeffs.get((self.top - e) as usize).cloned()
    }

    pub fn add(&self, other: &Self) -> Self {
        let top = self.top.max(other.top);
        let lowest = self.lowest_known().max(other.lowest_known());
        let coeffs = (lowest..=top)
            .rev()
            .map(|e| self.coeff(e).unwrap_or_else(K::zero) + other.coeff(e).unwrap_or_else(K::zero))
            .collect();
        Laurent { top, coeffs }
    }

    /// Series long division by a nonzero polynomial; relative precision is kept.
    pub fn div_poly(&self, n: &Poly<K>) -> Result<Self> {
        let e = n.degree().ok_or(Error::DivisionByZero)?;
        let lead = n.coeff(e);
        let mut q: Vec<K> = Vec::with_capacity(self.coeffs.len());
        for j in 0..self.coeffs.len() {
            let mut acc = self.coeffs[j].clone();
            for i in 1..=e.min(j) {
                acc = acc - n.coeff(e - i) * &q[j - i];
            }
            q.push(acc / &lead);
        }
        Ok(Laurent { top: self.top - e as i64, coeffs: q })
    }

    /// Terms of nonnegative degree. Fails when the truncation reaches above `X^0`.
    pub fn polypart(&self) -> Result<Poly<K>> {
        if self.lowest_known() > 0 {
            return Err(Error::Internal(format!(
                "Laurent precision too low: known only down to X^{}",
                self.lowest_known()
            )));
        }
        if self.top < 0 {
            return Ok(Poly::zero());
        }
        Ok(Poly::from_coeffs((0..=self.top).map(|e| self.coeff(e).unwrap()).collect()))
    }

    /// The known coefficients of negative degree.
    pub fn tail(&self) -> LaurentTail<K> {
        let center = self.top.min(-1);
        let coeffs: Vec<K> = (self.lowest_known()..=center).rev().filter_map(|e| self.coeff(e)).collect();
        LaurentTail { center, order: coeffs.len(), coeffs }
    }
}

fn check_radicand<K: Field>(d: &Poly<K>) -> Result<usize> {
    let deg = d.degree().ok_or_else(|| Error::InvalidRadicand("zero polynomial".into()))?;
    if deg % 2 == 1 {
        return Err(Error::InvalidRadicand("degree must be even".into()));
    }
    if !d.is_monic() {
        return Err(Error::InvalidRadicand("polynomial must be monic".into()));
    }
    Ok(deg / 2)
}

/// Laurent expansion of `sqrt(d)` at infinity for monic `d` of degree `2k`,
/// with `k + 1 + extra` coefficients (down to `X^(-extra)`).
pub fn sqrt_series<K: Field>(d: &Poly<K>, extra: usize) -> Result<Laurent<K>> {
    let k = check_radicand(d)?;
    let deg = 2 * k;
    let two = K::from_int(2);
    // s[j] is the coefficient of X^(k - j); s[0] = 1 because d is monic
    let mut s: Vec<K> = vec![K::one()];
    for j in 1..=k + extra {
        let mut acc = if j <= deg { d.coeff(deg - j) } else { K::zero() };
        for i in 1..j {
            acc = acc - s[i].clone() * &s[j - i];
        }
        s.push(acc / &two);
    }
    Ok(Laurent { top: k as i64, coeffs: s })
}

/// Polynomial part of `sqrt(d)` and at least `guard_terms` coefficients of
/// its tail.
pub fn sqrt_polypart<K: Field>(d: &Poly<K>, guard_terms: usize) -> Result<(Poly<K>, LaurentTail<K>)> {
    let series = sqrt_series(d, guard_terms)?;
    Ok((series.polypart()?, series.tail()))
}
