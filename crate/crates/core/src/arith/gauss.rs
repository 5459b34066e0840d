use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::int_sqrt;
use crate::error::{Error, Result};

/// A Gaussian integer `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn units() -> [GaussInt; 4] {
        [GaussInt::new(1, 0), GaussInt::new(0, 1), GaussInt::new(-1, 0), GaussInt::new(0, -1)]
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Division with remainder, rounding the exact quotient to the nearest
    /// lattice point so that `N(r) <= N(w) / 2`.
    pub fn div_rem(&self, w: &GaussInt) -> Result<(GaussInt, GaussInt)> {
        if w.is_zero() {
            return Err(Error::Domain("Gaussian division by zero"));
        }
        let n = w.norm();
        let num = self * &w.conj();
        let q = GaussInt { re: round_div(&num.re, &n), im: round_div(&num.im, &n) };
        let r = self - &(&q * w);
        Ok((q, r))
    }

    /// Exact quotient, if `w` divides `self`.
    pub fn div_exact(&self, w: &GaussInt) -> Option<GaussInt> {
        let (q, r) = self.div_rem(w).ok()?;
        r.is_zero().then_some(q)
    }

    /// The associate `u·z` with `re > 0, im >= 0` (zero maps to zero).
    pub fn first_quadrant(&self) -> GaussInt {
        let mut z = self.clone();
        if z.is_zero() {
            return z;
        }
        for _ in 0..4 {
            if z.re.is_positive() && !z.im.is_negative() {
                return z;
            }
            z = &z * &GaussInt::i();
        }
        unreachable!("one of the four associates lies in the first quadrant")
    }

    /// The one of `±z` with `re > 0`, or `re = 0` and `im > 0`.
    pub fn half_plane(&self) -> GaussInt {
        if self.re.is_negative() || (self.re.is_zero() && self.im.is_negative()) {
            -self
        } else {
            self.clone()
        }
    }
}

fn round_div(a: &BigInt, n: &BigInt) -> BigInt {
    // floor((2a + n) / 2n), n > 0
    let two_n: BigInt = n * 2;
    let num: BigInt = a * 2 + n;
    num.div_floor(&two_n)
}

pub fn gauss_norm(z: &GaussInt) -> BigInt {
    z.norm()
}

/// Greatest common divisor by the Euclidean algorithm on norms, normalized to
/// the first-quadrant associate.
pub fn gauss_gcd(z: &GaussInt, w: &GaussInt) -> Result<GaussInt> {
    if z.is_zero() && w.is_zero() {
        return Err(Error::Domain("gcd(0, 0) is undefined"));
    }
    let (mut a, mut b) = (z.clone(), w.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.first_quadrant())
}

/// A square root of `z` in `Z[i]`, normalized so that `re > 0` or
/// (`re = 0` and `im >= 0`).
pub fn gauss_sqrt(z: &GaussInt) -> Option<GaussInt> {
    if z.is_zero() {
        return Some(GaussInt::zero());
    }
    // w = x + yi with x^2 - y^2 = re, 2xy = im, x^2 + y^2 = |z|
    let modulus = int_sqrt(&z.norm())?;
    let x2 = &z.re + &modulus;
    let y2 = &modulus - &z.re;
    if x2.is_odd() || y2.is_odd() {
        return None;
    }
    let x = int_sqrt(&(x2 / 2))?;
    let mut y = int_sqrt(&(y2 / 2))?;
    if z.im.is_negative() {
        y = -y;
    }
    let w = GaussInt { re: x, im: y };
    (&w * &w == *z).then(|| w.half_plane())
}

impl Zero for GaussInt {
    fn zero() -> Self {
        GaussInt::new(0, 0)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussInt {
    fn one() -> Self {
        GaussInt::new(1, 0)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_complex(f, &self.re, &self.im)
    }
}

/// Writes `a+bi` in the compact form shared by all Gaussian types.
pub(crate) fn write_complex<T>(f: &mut fmt::Formatter<'_>, re: &T, im: &T) -> fmt::Result
where
    T: fmt::Display + Zero + One + Signed + Clone,
{
    let imag = |f: &mut fmt::Formatter<'_>, v: &T| -> fmt::Result {
        if v.is_one() {
            write!(f, "i")
        } else if (-v.clone()).is_one() {
            write!(f, "-i")
        } else {
            write!(f, "{v}i")
        }
    };
    match (re.is_zero(), im.is_zero()) {
        (_, true) => write!(f, "{re}"),
        (true, false) => imag(f, im),
        (false, false) => {
            write!(f, "{re}")?;
            if im.is_positive() {
                write!(f, "+")?;
            }
            imag(f, im)
        }
    }
}

macro_rules! forward_gauss_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: GaussInt) -> GaussInt { (&self).$method(&rhs) }
        }
        impl<'a> $trait<&'a GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: &'a GaussInt) -> GaussInt { (&self).$method(rhs) }
        }
    )*};
}

impl<'a, 'b> Add<&'b GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a, 'b> Sub<&'b GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a, 'b> Mul<&'b GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

forward_gauss_ops!(Add add, Sub sub, Mul mul);

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        -&self
    }
}
