use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::arith::{Field, GaussRat, Rat};
use crate::cfrac::{Period, DEFAULT_MAX_STEPS};
use crate::error::Error;
use crate::poly::Poly;

/// Coefficient ring in which solutions are sought.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Z,
    Q,
    Zi,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Z => "Z",
            Ring::Q => "Q",
            Ring::Zi => "Zi",
        })
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "Z" | "z" => Ok(Ring::Z),
            "Q" | "q" => Ok(Ring::Q),
            "Zi" | "zi" | "Z[i]" => Ok(Ring::Zi),
            _ => Err(Error::RingUnsupported("expected one of Z, Q, Zi")),
        }
    }
}

/// Right-hand side of `P^2 - D Q^2 = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Neg => -1,
            Sign::Pos => 1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Neg => "neg",
            Sign::Pos => "pos",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "neg" | "-1" => Ok(Sign::Neg),
            "pos" | "1" | "+1" => Ok(Sign::Pos),
            _ => Err(Error::Domain("sign must be neg or pos")),
        }
    }
}

/// Coefficient box for exhaustive search: `deg Q <= max_deg_q`, every real
/// and imaginary part in `[-coeff_bound, coeff_bound]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBox {
    pub max_deg_q: usize,
    pub coeff_bound: u32,
}

impl SearchBox {
    pub fn new(max_deg_q: usize, coeff_bound: u32) -> Result<Self, Error> {
        if coeff_bound == 0 {
            return Err(Error::Domain("coeff_bound must be at least 1"));
        }
        Ok(SearchBox { max_deg_q, coeff_bound })
    }
}

pub const DEFAULT_CANDIDATE_CAP: u128 = 10_000_000;

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub max_steps: usize,
    /// Largest power of the fundamental unit tried for integrality.
    pub max_power: u32,
    /// Fallback search box when the expansion does not decide.
    pub search: SearchBox,
    pub candidate_cap: u128,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_steps: DEFAULT_MAX_STEPS,
            max_power: 12,
            search: SearchBox { max_deg_q: 3, coeff_bound: 4 },
            candidate_cap: DEFAULT_CANDIDATE_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Solution,
    ProvedNone,
    NoneWithinBounds,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    /// Negative equation solved by a convergent at an odd multiple of an odd period.
    OddPeriod,
    /// Solution is a scalar multiple of a power of the unit found on the period.
    PeriodUnit,
    /// Neither an odd nor an even power of the unit can be rescaled to the
    /// requested norm inside the coefficient field.
    EvenPeriodNoIntegral,
    /// `n0(D) <= deg D / 2`.
    MasonRadicalBound,
    /// Leading coefficients of all candidate powers leave the ring.
    LeadingCoeffNonIntegral,
    /// Exhaustive search inside the box produced the witness.
    SearchWitness,
    /// Exhaustive search inside the box found nothing.
    SearchExhausted,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Limits that were in force when a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_steps: usize,
    pub max_power: u32,
    /// Set when the fallback search ran.
    pub search: Option<SearchBox>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellVerdict<K> {
    pub kind: VerdictKind,
    pub sign: Sign,
    pub ring: Ring,
    pub reason: Reason,
    /// `(P, Q)` with `P^2 - D Q^2 = sign`, present exactly for `Solution`.
    pub witness: Option<(Poly<K>, Poly<K>)>,
    pub period: Option<Period>,
    /// Power of the fundamental unit the witness came from.
    pub power: Option<u32>,
    pub bounds: Bounds,
}

/// Coefficient fields the solver can search over: `Q` for the rings `Z`
/// and `Q`, `Q(i)` for `Z[i]`.
pub trait PellScalar: Field + Ord {
    fn supports(ring: Ring) -> bool;

    fn in_ring(&self, ring: Ring) -> bool;

    /// For a ring element: divisible by the prime over 2 (`2` in `Z`, `1+i` in `Z[i]`).
    fn divisible_by_two_prime(&self, ring: Ring) -> bool;

    /// All values whose real (and imaginary) parts lie in `[-bound, bound]`.
    fn box_values(bound: u32, ring: Ring) -> Vec<Self>;
}

fn box_ints(bound: u32) -> impl Iterator<Item = Rat> + Clone {
    let b = i64::from(bound);
    (-b..=b).map(|v| Rat::from_integer(v.into()))
}

impl PellScalar for Rat {
    fn supports(ring: Ring) -> bool {
        matches!(ring, Ring::Z | Ring::Q)
    }

    fn in_ring(&self, ring: Ring) -> bool {
        match ring {
            Ring::Q => true,
            Ring::Z | Ring::Zi => self.is_integer(),
        }
    }

    fn divisible_by_two_prime(&self, _ring: Ring) -> bool {
        self.is_integer() && !self.numer().bit(0)
    }

    fn box_values(bound: u32, _ring: Ring) -> Vec<Self> {
        box_ints(bound).collect()
    }
}

impl PellScalar for GaussRat {
    fn supports(ring: Ring) -> bool {
        ring == Ring::Zi
    }

    fn in_ring(&self, ring: Ring) -> bool {
        match ring {
            Ring::Zi => self.is_gauss_int(),
            Ring::Z => self.im.is_zero() && self.re.is_integer(),
            Ring::Q => self.im.is_zero(),
        }
    }

    fn divisible_by_two_prime(&self, ring: Ring) -> bool {
        match ring {
            // (1+i) | a+bi iff a = b mod 2
            Ring::Zi => self.is_gauss_int() && !(self.re.numer() - self.im.numer()).bit(0),
            _ => self.im.is_zero() && self.re.divisible_by_two_prime(ring),
        }
    }

    fn box_values(bound: u32, ring: Ring) -> Vec<Self> {
        if ring != Ring::Zi {
            return box_ints(bound).map(GaussRat::from).collect();
        }
        box_ints(bound)
            .flat_map(|re| box_ints(bound).map(move |im| GaussRat::new(re.clone(), im)))
            .collect()
    }
}
