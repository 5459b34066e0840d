//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Field;
use crate::error::{Error, Result};

/// Dense polynomial, coefficients stored in ascending degree order with no
/// trailing zeros. The zero polynomial has an empty coefficient list and
/// degree `None`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn constant(c: K) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: K, degree: usize) -> Self {
        let mut coeffs = vec![K::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Ascending integer coefficients, e.g. `[3, 0, 1]` is `X^2 + 3`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| K::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&(K::one() / l)),
            None => Self::zero(),
        }
    }

    /// The associate `±p` whose leading coefficient is positive.
    pub fn with_positive_lead(&self) -> Self {
        match self.lead() {
            Some(l) if !l.is_positive_half() => -self,
            _ => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * K::from_int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs.iter().rev().fold(K::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Euclidean division: `self = q·b + r` with `deg r < deg b`.
    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = K::one() / &b.coeffs[db];
        let mut r = self.coeffs.clone();
        let Some(da) = self.degree().filter(|&da| da >= db) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut q = vec![K::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = r[i + db].clone() * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * bj;
            }
            q[i] = c;
        }
        r.truncate(db);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// `self / b` when the division leaves no remainder.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(b).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Domain("gcd(0, 0) is undefined"));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// True iff `gcd(p, p')` is constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::Domain("squarefree test of the zero polynomial"));
        }
        Ok(self.gcd(&self.derivative())?.is_constant())
    }

    /// Monic radical `p / gcd(p, p')` and its degree, the number of distinct
    /// complex zeros of `p`.
    pub fn radical(&self) -> Result<(Self, usize)> {
        if self.is_zero() {
            return Err(Error::Domain("radical of the zero polynomial"));
        }
        let g = self.gcd(&self.derivative())?;
        let rad = self
            .div_exact(&g)
            .ok_or_else(|| Error::Internal("gcd with derivative does not divide".into()))?
            .monic();
        let n0 = rad.degree().unwrap_or(0);
        Ok((rad, n0))
    }

    /// A polynomial `p` with `p^2 = self`, if one exists over `K`; its
    /// leading coefficient is positive in the sense of [`Field::is_positive_half`].
    pub fn sqrt_exact(&self) -> Option<Self> {
        let Some(deg) = self.degree() else {
            return Some(Self::zero());
        };
        if deg % 2 == 1 {
            return None;
        }
        let m = deg / 2;
        let top = self.coeffs[deg].sqrt()?;
        let two_top = top.clone() + &top;
        // root[j] is the coefficient of X^(m - j)
        let mut root: Vec<K> = Vec::with_capacity(m + 1);
        root.push(top);
        for j in 1..=m {
            let mut acc = self.coeffs[deg - j].clone();
            for i in 1..j {
                acc = acc - root[i].clone() * &root[j - i];
            }
            root.push(acc / &two_top);
        }
        root.reverse();
        let p = Self::from_coeffs(root);
        (&p * &p == *self).then_some(p)
    }
}

impl<K: Field> Default for Poly<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, 'b, K: Field> Add<&'b Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &'b Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, 'b, K: Field> Sub<&'b Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &'b Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, 'b, K: Field> Mul<&'b Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &'b Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_poly_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl<K: Field> $trait<Poly<K>> for Poly<K> {
            type Output = Poly<K>;
            fn $method(self, rhs: Poly<K>) -> Poly<K> { (&self).$method(&rhs) }
        }
        impl<'a, K: Field> $trait<&'a Poly<K>> for Poly<K> {
            type Output = Poly<K>;
            fn $method(self, rhs: &'a Poly<K>) -> Poly<K> { (&self).$method(rhs) }
        }
    )*};
}

forward_poly_ops!(Add add, Sub sub, Mul mul);

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        -&self
    }
}

/// Canonical text form, e.g. `4X^3 + 3X`, `1/2X - 7`, `(1+2i)X^2 + iX`.
/// The expression parser reads this form back to the same polynomial.
impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match e {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{e}"),
            };
            if c.is_compound() {
                write!(f, "{}({c}){var}", if first { "" } else { " + " })?;
            } else {
                let negative = !c.is_positive_half();
                let abs = if negative { -c.clone() } else { c.clone() };
                let sign = match (first, negative) {
                    (true, true) => "-",
                    (true, false) => "",
                    (false, true) => " - ",
                    (false, false) => " + ",
                };
                if abs.is_one() && e > 0 {
                    write!(f, "{sign}{var}")?;
                } else {
                    write!(f, "{sign}{abs}{var}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{GaussRat, Rat};
    use proptest::prelude::*;

    type P = Poly<Rat>;

    fn p(c: &[i64]) -> P {
        P::from_ints(c)
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(P::zero().degree(), None);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn divrem_examples() {
        assert_eq!(p(&[0, 0, 0, 1]).div_rem(&p(&[1, 0, 1])).unwrap(), (p(&[0, 1]), p(&[0, -1])));
        let d = p(&[7, 0, 1]);
        assert_eq!(d.div_rem(&d).unwrap(), (P::one(), P::zero()));
        assert_eq!(p(&[3, 0, 2]).div_rem(&p(&[0, 2])).unwrap(), (p(&[0, 1]), p(&[3])));
        assert_eq!(p(&[1]).div_rem(&P::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[0, 2])).unwrap(), P::one());
        let x2p1 = p(&[1, 0, 1]);
        let a = &x2p1 * &x2p1;
        let b = &x2p1 * &P::x();
        assert_eq!(a.gcd(&b).unwrap(), x2p1);
        assert!(P::zero().gcd(&P::zero()).is_err());
    }

    #[test]
    fn squarefree_examples() {
        assert!(p(&[3, 0, 1]).is_squarefree().unwrap());
        assert!(!p(&[1, 0, 2, 0, 1]).is_squarefree().unwrap());
        assert!(!p(&[0, 0, 0, 0, 1]).is_squarefree().unwrap());
        assert!(P::zero().is_squarefree().is_err());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(p(&[0, 0, 0, 0, 1]).radical().unwrap(), (P::x(), 1));
        assert_eq!(p(&[1, 0, 2, 0, 1]).radical().unwrap(), (p(&[1, 0, 1]), 2));
        assert_eq!(p(&[0, 0, 1, 0, 1]).radical().unwrap(), (p(&[0, 1, 0, 1]), 3));
        assert!(P::zero().radical().is_err());
    }

    #[test]
    fn sqrt_exact_examples() {
        assert_eq!(p(&[1, 0, 2, 0, 1]).sqrt_exact(), Some(p(&[1, 0, 1])));
        assert_eq!(p(&[0, 0, 4, 0, 4]).sqrt_exact(), None);
        assert_eq!(p(&[0, 0, 9, 0, 24, 0, 16]).sqrt_exact(), Some(p(&[0, 3, 0, 4])));
        assert_eq!(p(&[-1]).sqrt_exact(), None);
        assert_eq!(P::zero().sqrt_exact(), Some(P::zero()));
    }

    #[test]
    fn sqrt_exact_over_gaussian_rationals() {
        // (iX + i)^2 = -X^2 - 2X - 1
        let a = Poly::<GaussRat>::from_ints(&[-1, -2, -1]);
        let root = a.sqrt_exact().unwrap();
        assert_eq!(&root * &root, a);
        assert_eq!(root.lead(), Some(&GaussRat::i()));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[3, 0, 1]).to_string(), "X^2 + 3");
        assert_eq!(p(&[0, 3, 0, 4]).to_string(), "4X^3 + 3X");
        assert_eq!(P::from_coeffs(vec![rat(7, 1), rat(-1, 2)]).to_string(), "-1/2X + 7");
        assert_eq!(P::zero().to_string(), "0");
        let g = Poly::from_coeffs(vec![GaussRat::i(), GaussRat::new(rat(1, 1), rat(2, 1))]);
        assert_eq!(g.to_string(), "(1+2i)X + i");
    }

    fn small_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-20i64..20, 1i64..5), 0..6)
            .prop_map(|cs| P::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn divrem_reconstructs(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn radical_is_idempotent(a in small_poly()) {
            prop_assume!(!a.is_zero());
            let (rad, n0) = a.radical().unwrap();
            prop_assert_eq!(rad.radical().unwrap(), (rad.clone(), n0));
        }

        #[test]
        fn sqrt_exact_is_sound_and_complete(a in small_poly(), b in small_poly()) {
            let sq = &a * &a;
            let root = sq.sqrt_exact().unwrap();
            prop_assert_eq!(&root * &root, sq);
            prop_assert_eq!(root, a.with_positive_lead());
            if let Some(r) = b.sqrt_exact() {
                prop_assert_eq!(&r * &r, b);
            }
        }
    }
}
