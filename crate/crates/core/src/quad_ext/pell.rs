use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::surd::SurdRat;
use crate::arith::{Field, Rat};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Checks that `d` is monic, squarefree, of even degree at least 2.
pub fn validate_radicand<K: Field>(d: &Poly<K>) -> Result<()> {
    let deg = d.degree().ok_or_else(|| Error::InvalidRadicand("zero polynomial".into()))?;
    if deg == 0 || deg % 2 == 1 {
        return Err(Error::InvalidRadicand("degree must be even".into()));
    }
    if !d.is_monic() {
        return Err(Error::InvalidRadicand("polynomial must be monic".into()));
    }
    if !d.is_squarefree()? {
        return Err(Error::InvalidRadicand("polynomial must be squarefree".into()));
    }
    Ok(())
}

/// A formal element `P(X) + Q(X)·sqrt(D(X))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellElement<K> {
    p: Poly<K>,
    q: Poly<K>,
    d: Poly<K>,
}

impl<K: Field> PellElement<K> {
    pub fn new(p: Poly<K>, q: Poly<K>, d: Poly<K>) -> Result<Self> {
        validate_radicand(&d)?;
        Ok(PellElement { p, q, d })
    }

    pub fn one(d: Poly<K>) -> Result<Self> {
        Self::new(Poly::one(), Poly::zero(), d)
    }

    pub fn p(&self) -> &Poly<K> {
        &self.p
    }

    pub fn q(&self) -> &Poly<K> {
        &self.q
    }

    pub fn d_poly(&self) -> &Poly<K> {
        &self.d
    }

    pub fn into_parts(self) -> (Poly<K>, Poly<K>) {
        (self.p, self.q)
    }

    pub fn conj(&self) -> Self {
        PellElement { p: self.p.clone(), q: -&self.q, d: self.d.clone() }
    }

    pub fn scale(&self, c: &K) -> Self {
        PellElement { p: self.p.scale(c), q: self.q.scale(c), d: self.d.clone() }
    }

    /// `(p1 p2 + q1 q2 D) + (p1 q2 + p2 q1) sqrt(D)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::InvalidRadicand(format!("modulus mismatch: {} vs {}", self.d, other.d)));
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        PellElement {
            p: &(&self.p * &other.p) + &(&(&self.q * &other.q) * &self.d),
            q: &(&self.p * &other.q) + &(&other.p * &self.q),
            d: self.d.clone(),
        }
    }

    /// `P^2 - D Q^2`.
    pub fn norm(&self) -> Poly<K> {
        &(&self.p * &self.p) - &(&self.d * &(&self.q * &self.q))
    }

    /// `self^n` by repeated squaring, `n >= 1`.
    pub fn pow(&self, mut n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("exponent must be positive"));
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        loop {
            if n & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul_unchecked(&base),
                    None => base.clone(),
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = base.mul_unchecked(&base);
        }
        Ok(acc.expect("n >= 1"))
    }
}

/// `(X^k / sqrt(d), 1 / sqrt(d))`, a norm `-1` element for `D = X^(2k) + d`.
pub fn fundamental_solution_family(k: usize, d: &BigInt) -> Result<PellElement<SurdRat>> {
    if d.is_zero() {
        return Err(Error::Domain("d must be nonzero"));
    }
    if k == 0 {
        return Err(Error::Domain("k must be positive"));
    }
    let inv_root = SurdRat::new(Rat::zero(), Rat::new(BigInt::one(), d.clone()), d.clone())?;
    let dr = SurdRat::rational(Rat::from_integer(d.clone()));
    let d_poly = &Poly::monomial(SurdRat::one(), 2 * k) + &Poly::constant(dr);
    let e = PellElement::new(Poly::monomial(inv_root.clone(), k), Poly::constant(inv_root), d_poly)?;
    debug_assert_eq!(e.norm(), Poly::constant(-SurdRat::one()));
    Ok(e)
}

/// Norm `-1` element `(U, V)` with `deg U = 1`, `deg V = 0` for a monic
/// squarefree quadratic `X^2 + bX + c`, obtained by completing the square:
/// with `e = c - b^2/4`, `U = (X + b/2)/sqrt(e)` and `V = 1/sqrt(e)`.
pub fn fundamental_solution_quadratic(d_poly: &Poly<Rat>) -> Result<PellElement<SurdRat>> {
    if d_poly.degree() != Some(2) || !d_poly.is_monic() {
        return Err(Error::InvalidRadicand("expected a monic quadratic".into()));
    }
    let b = d_poly.coeff(1);
    let c = d_poly.coeff(0);
    let half_b = &b / Rat::from_integer(2.into());
    let e = &c - &half_b * &half_b;
    if e.is_zero() {
        return Err(Error::InvalidRadicand("repeated root".into()));
    }
    // e = p/q, sqrt(e) = sqrt(pq)/q, 1/sqrt(e) = sqrt(pq)/p
    let radicand = e.numer() * e.denom();
    let inv_root = SurdRat::new(Rat::zero(), Rat::new(BigInt::one(), e.numer().clone()), radicand)?;
    let lift = |r: &Rat| SurdRat::rational(r.clone());
    let u = Poly::from_coeffs(vec![lift(&half_b), SurdRat::one()]).scale(&inv_root);
    let v = Poly::constant(inv_root);
    let el = PellElement::new(u, v, d_poly.map(lift))?;
    if el.norm() != Poly::constant(-SurdRat::one()) {
        return Err(Error::Internal(format!("quadratic fundamental solution for {d_poly} has norm {}", el.norm())));
    }
    Ok(el)
}
