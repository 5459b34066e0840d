//! Decision procedures for `P^2 - D Q^2 = ±1`, exhaustive search oracles,
//! and the radical bound.

mod family;
mod mason;
mod pipeline;
mod search;
mod types;

pub use family::{
    family_no_solution_check, generate_solutions, leading_coeff, leading_coeff_is_integral, FamilyKind,
    FamilyReport, GeneratedSolution,
};
pub use mason::{is_neg_square_gauss, mason_inequality_check, mason_no_solution_test, MasonReport};
pub use pipeline::{solution_sequence, solve, solve_negative, solve_positive, solve_with_expansion};
pub use search::{brute_force_search, candidate_count};
pub use types::{
    Bounds, PellScalar, PellVerdict, Reason, Ring, SearchBox, Sign, SolveOptions, VerdictKind, DEFAULT_CANDIDATE_CAP,
};
