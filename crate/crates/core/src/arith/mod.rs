//! Exact scalars: rationals, Gaussian integers, and the rational Gaussian field.

mod field;
mod gauss;
mod gauss_rat;

pub use field::{rat_sqrt, Field, Rat};
pub use gauss::{gauss_gcd, gauss_norm, gauss_sqrt, GaussInt};
pub use gauss_rat::GaussRat;

pub use num_bigint::BigInt;
