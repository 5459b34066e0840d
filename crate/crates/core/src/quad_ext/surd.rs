use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat_sqrt, Field, Rat};
use crate::error::{Error, Result};

/// An element `a + b·sqrt(d)` of `Q(sqrt(d))`.
///
/// Perfect-square radicands fold into the rational part on construction, so
/// `b = 0` whenever `d = m^2`. Elements with `b = 0` are plain rationals and
/// combine with any radicand; two irrational elements must share `d`.
#[derive(Clone, Debug)]
pub struct SurdRat {
    a: Rat,
    b: Rat,
    d: BigInt,
}

impl SurdRat {
    pub fn new(a: Rat, b: Rat, d: BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::Domain("radicand must be nonzero"));
        }
        let mut s = SurdRat { a, b, d };
        if let Some(m) = crate::arith::rat_sqrt(&Rat::from_integer(s.d.clone())) {
            s.a += &s.b * m;
            s.b = Rat::zero();
        }
        Ok(s)
    }

    pub fn rational(a: Rat) -> Self {
        SurdRat { a, b: Rat::zero(), d: BigInt::one() }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: &BigInt) -> Result<Self> {
        Self::new(Rat::zero(), Rat::one(), d.clone())
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.is_integer()
    }

    pub fn conj(&self) -> Self {
        SurdRat { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// `a^2 - d b^2`.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - Rat::from_integer(self.d.clone()) * &self.b * &self.b
    }

    fn common_radicand(&self, other: &Self) -> Result<BigInt> {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, _) => Ok(other.d.clone()),
            (_, true) => Ok(self.d.clone()),
            _ if self.d == other.d => Ok(self.d.clone()),
            _ => Err(Error::RadicandMismatch(self.d.to_string(), other.d.to_string())),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(SurdRat { a: &self.a + &other.a, b: &self.b + &other.b, d })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other.clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let dr = Rat::from_integer(d.clone());
        Ok(SurdRat {
            a: &self.a * &other.a + &self.b * &other.b * dr,
            b: &self.a * &other.b + &self.b * &other.a,
            d,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        let n = other.norm();
        if n.is_zero() {
            return Err(Error::Domain("division by zero in Q(sqrt(d))"));
        }
        let inv = SurdRat { a: &other.a / &n, b: -&other.b / &n, d: other.d.clone() };
        self.try_mul(&inv)
    }

    /// Sign of the real number `a + b sqrt(d)` for `d > 0`.
    fn real_sign_positive(&self) -> bool {
        let (pa, pb) = (Signed::is_positive(&self.a), Signed::is_positive(&self.b));
        let (za, zb) = (self.a.is_zero(), self.b.is_zero());
        match (za || pa, zb || pb) {
            (true, true) => !(za && zb),
            (false, false) => false,
            // opposite signs: compare a^2 with d b^2
            _ => {
                let a_dominates = &self.a * &self.a > Rat::from_integer(self.d.clone()) * &self.b * &self.b;
                if pa { a_dominates } else { !a_dominates }
            }
        }
    }
}

impl PartialEq for SurdRat {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for SurdRat {}

impl Hash for SurdRat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        if !self.b.is_zero() {
            self.d.hash(state);
        }
    }
}

impl Zero for SurdRat {
    fn zero() -> Self {
        SurdRat::rational(Rat::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for SurdRat {
    fn one() -> Self {
        SurdRat::rational(Rat::one())
    }
}

macro_rules! surd_ops {
    ($($trait:ident $method:ident $checked:ident),*) => {$(
        impl<'a, 'b> $trait<&'b SurdRat> for &'a SurdRat {
            type Output = SurdRat;
            fn $method(self, rhs: &'b SurdRat) -> SurdRat {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<SurdRat> for SurdRat {
            type Output = SurdRat;
            fn $method(self, rhs: SurdRat) -> SurdRat { (&self).$method(&rhs) }
        }
        impl<'a> $trait<&'a SurdRat> for SurdRat {
            type Output = SurdRat;
            fn $method(self, rhs: &'a SurdRat) -> SurdRat { (&self).$method(rhs) }
        }
    )*};
}

surd_ops!(Add add try_add, Sub sub try_sub, Mul mul try_mul, Div div try_div);

impl Neg for SurdRat {
    type Output = SurdRat;
    fn neg(self) -> SurdRat {
        SurdRat { a: -self.a, b: -self.b, d: self.d }
    }
}

impl fmt::Display for SurdRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = format!("sqrt({})", self.d);
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if Signed::is_positive(&self.b) {
                write!(f, "+")?;
            }
        }
        if self.b.is_one() {
            write!(f, "{root}")
        } else if (-self.b.clone()).is_one() {
            write!(f, "-{root}")
        } else {
            write!(f, "{}*{root}", self.b)
        }
    }
}

impl Field for SurdRat {
    fn from_rat(r: Rat) -> Self {
        SurdRat::rational(r)
    }

    fn to_rat(&self) -> Option<Rat> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let dr = Rat::from_integer(self.d.clone());
        let two = Rat::from_integer(2.into());
        // w = x + y sqrt(d): x^2 + d y^2 = a, 2xy = b
        let mut candidates = Vec::new();
        if self.b.is_zero() {
            if let Some(x) = rat_sqrt(&self.a) {
                candidates.push((x, Rat::zero()));
            }
            if let Some(y) = rat_sqrt(&(&self.a / &dr)) {
                candidates.push((Rat::zero(), y));
            }
        } else if let Some(n) = rat_sqrt(&self.norm()) {
            for x2 in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
                if let Some(x) = rat_sqrt(&x2).filter(|x| !x.is_zero()) {
                    let y = &self.b / (&x * &two);
                    candidates.push((x, y));
                }
            }
        }
        candidates.into_iter().find_map(|(x, y)| {
            let w = SurdRat { a: x, b: y, d: self.d.clone() };
            (w.try_mul(&w).ok()? == *self).then(|| if w.is_positive_half() { w } else { -w })
        })
    }

    fn is_positive_half(&self) -> bool {
        if self.b.is_zero() || Signed::is_positive(&self.d) {
            self.real_sign_positive()
        } else {
            Signed::is_positive(&self.a) || (self.a.is_zero() && Signed::is_positive(&self.b))
        }
    }

    fn is_compound(&self) -> bool {
        !self.b.is_zero()
    }
}
