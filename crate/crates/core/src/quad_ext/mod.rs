//! Arithmetic in `Q(sqrt(d))` and in `K[X][sqrt(D(X))]`.

mod pell;
mod surd;

pub use pell::{fundamental_solution_family, fundamental_solution_quadratic, validate_radicand, PellElement};
pub use surd::SurdRat;
