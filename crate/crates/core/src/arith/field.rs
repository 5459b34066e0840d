use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced rational number. `BigRational` normalizes after every operation,
/// so `gcd(|num|, den) = 1` and `den > 0` hold for every value we can observe.
pub type Rat = BigRational;

/// An exact coefficient field of characteristic zero containing `Q`.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn from_rat(r: Rat) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// The rational value, if this element lies in `Q`.
    fn to_rat(&self) -> Option<Rat>;

    /// An exact square root inside the field, normalized with [`Field::is_positive_half`].
    fn sqrt(&self) -> Option<Self>;

    /// Picks one element out of every `{x, -x}` pair: positive real part,
    /// ties broken toward positive imaginary part. False for zero.
    fn is_positive_half(&self) -> bool;

    /// Whether the printed form is compound (`a+bi`) and needs parentheses
    /// when used as a coefficient.
    fn is_compound(&self) -> bool;
}

/// Square root of a rational, if it is the square of a rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(Rat::new(n, d))
}

pub(crate) fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

impl Field for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }

    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }

    fn sqrt(&self) -> Option<Self> {
        rat_sqrt(self)
    }

    fn is_positive_half(&self) -> bool {
        Signed::is_positive(self)
    }

    fn is_compound(&self) -> bool {
        false
    }
}
