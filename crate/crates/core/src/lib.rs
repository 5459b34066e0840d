//! Exact machinery for polynomial Pell equations `P^2 - D Q^2 = ±1`.
//!
//! The crate is organized bottom-up:
//!
//! - [`arith`]: rationals, Gaussian integers, `Q(i)`;
//! - [`poly`] and [`laurent`]: dense polynomials and Laurent series at infinity;
//! - [`quad_ext`]: `Q(sqrt(d))` and formal elements `P + Q sqrt(D)`;
//! - [`cfrac`]: continued fractions of `sqrt(D)` with period detection;
//! - [`solver`]: decision procedures, brute-force oracles and the
//!   Stothers–Mason bound;
//! - [`expr`]: a small polynomial expression language.

pub mod arith;
pub mod cfrac;
pub mod error;
pub mod expr;
pub mod laurent;
pub mod poly;
pub mod quad_ext;
pub mod solver;

pub use error::{Error, Result};
