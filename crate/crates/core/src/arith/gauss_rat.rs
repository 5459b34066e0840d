use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::field::{rat_sqrt, Field, Rat};
use super::gauss::{write_complex, GaussInt};

/// An element `re + im·i` of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn i() -> Self {
        GaussRat::new(Rat::zero(), Rat::one())
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }

    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_gauss_int(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    pub fn to_gauss_int(&self) -> Option<GaussInt> {
        self.is_gauss_int()
            .then(|| GaussInt { re: self.re.to_integer(), im: self.im.to_integer() })
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::new(r, Rat::zero())
    }
}

impl From<&GaussInt> for GaussRat {
    fn from(z: &GaussInt) -> Self {
        GaussRat::new(Rat::from_integer(z.re.clone()), Rat::from_integer(z.im.clone()))
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::new(Rat::zero(), Rat::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::new(Rat::one(), Rat::zero())
    }
}

impl<'a, 'b> Add<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a, 'b> Sub<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a, 'b> Mul<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a, 'b> Div<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &'b GaussRat) -> GaussRat {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in Q(i)");
        let num = self * &rhs.conj();
        GaussRat::new(num.re / &n, num.im / n)
    }
}

macro_rules! forward_owned {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat { (&self).$method(&rhs) }
        }
        impl<'a> $trait<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &'a GaussRat) -> GaussRat { (&self).$method(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_complex(f, &self.re, &self.im)
    }
}

impl Field for GaussRat {
    fn from_rat(r: Rat) -> Self {
        r.into()
    }

    fn to_rat(&self) -> Option<Rat> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        // w = x + yi: x^2 - y^2 = re, 2xy = im, x^2 + y^2 = |self|
        let modulus = rat_sqrt(&self.norm())?;
        let two = Rat::from_integer(2.into());
        let x = rat_sqrt(&((&self.re + &modulus) / &two))?;
        let y = if x.is_zero() {
            rat_sqrt(&((&modulus - &self.re) / &two))?
        } else {
            &self.im / (&x * &two)
        };
        let w = GaussRat::new(x, y);
        if &w * &w != *self {
            return None;
        }
        Some(if w.is_positive_half() { w } else { -w })
    }

    fn is_positive_half(&self) -> bool {
        Signed::is_positive(&self.re) || (self.re.is_zero() && Signed::is_positive(&self.im))
    }

    fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(re: i64, im: i64) -> GaussRat {
        GaussRat::new(Rat::from_integer(re.into()), Rat::from_integer(im.into()))
    }

    #[test]
    fn field_ops() {
        let a = q(1, 2);
        let b = q(3, -1);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a - &a, GaussRat::zero());
        assert_eq!(&GaussRat::i() * &GaussRat::i(), q(-1, 0));
    }

    #[test]
    fn square_roots() {
        assert_eq!(q(-1, 0).sqrt(), Some(q(0, 1)));
        assert_eq!(q(0, 2).sqrt(), Some(q(1, 1)));
        assert_eq!(q(3, 4).sqrt(), Some(q(2, 1)));
        assert_eq!(q(2, 0).sqrt(), None);
        let quarter = GaussRat::new(Rat::new((-1).into(), 4.into()), Rat::zero());
        assert_eq!(quarter.sqrt(), Some(GaussRat::new(Rat::zero(), Rat::new(1.into(), 2.into()))));
    }

    #[test]
    fn display() {
        assert_eq!(q(2, 3).to_string(), "2+3i");
        assert_eq!(q(0, -1).to_string(), "-i");
        assert_eq!(q(5, 0).to_string(), "5");
        assert_eq!(GaussRat::new(Rat::new(1.into(), 2.into()), Rat::new((-3).into(), 4.into())).to_string(), "1/2-3/4i");
    }
}
