//! Exhaustive oracle: enumerate `Q` in a coefficient box and test whether
//! `D Q^2 + sign` is a perfect square.

use rayon::prelude::*;

use super::types::{PellScalar, Ring, SearchBox, Sign};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Number of `Q` tuples the box spans, before normalization filters.
pub fn candidate_count<K: PellScalar>(bx: SearchBox, ring: Ring) -> u128 {
    let per = K::box_values(bx.coeff_bound, ring).len() as u128;
    let mut n: u128 = 1;
    for _ in 0..=bx.max_deg_q {
        n = n.saturating_mul(per);
    }
    n
}

fn square_in_ring<K: PellScalar>(v: &K, ring: Ring) -> bool {
    v.sqrt().is_some_and(|r| r.in_ring(ring))
}

/// All `(P, Q)` with `Q != 0` inside the box solving `P^2 - D Q^2 = sign`.
///
/// Only `±` may be moved independently onto `P` and `Q` without changing
/// the norm, so each solution is reported once with both leading
/// coefficients in the positive half-plane. Output is sorted by `deg Q`,
/// then the coefficient lists of `Q` and `P` from the constant term up.
///
/// Cost: `(2 bound + 1)^((max_deg_q + 1) u)` candidates with `u = 1` over
/// `Z` and `u = 2` over `Z[i]`; boxes above `cap` are refused.
pub fn brute_force_search<K: PellScalar>(
    d: &Poly<K>,
    ring: Ring,
    bx: SearchBox,
    sign: Sign,
    cap: u128,
) -> Result<Vec<(Poly<K>, Poly<K>)>> {
    if !matches!(ring, Ring::Z | Ring::Zi) || !K::supports(ring) {
        return Err(Error::RingUnsupported("search runs over Z or Z[i]"));
    }
    if d.is_zero() {
        return Err(Error::InvalidRadicand("zero polynomial".into()));
    }
    if bx.coeff_bound == 0 {
        return Err(Error::Domain("coeff_bound must be at least 1"));
    }
    let candidates = candidate_count::<K>(bx, ring);
    if candidates > cap {
        return Err(Error::BoxTooLarge { candidates, cap });
    }

    let values = K::box_values(bx.coeff_bound, ring);
    let s = K::from_int(sign.value());
    let one = K::one();
    let d0 = d.coeff(0);
    let d1 = d.eval(&one);
    let dm1 = d.eval(&-one.clone());
    // P(x)^2 = D(x) Q(x)^2 + sign at x = 0, 1, -1 prunes nearly everything
    // before any polynomial square root is attempted.
    let constants: Vec<&K> = values
        .iter()
        .filter(|c| square_in_ring(&(d0.clone() * *c * *c + &s), ring))
        .collect();
    let rest = bx.max_deg_q;

    let mut found: Vec<(Poly<K>, Poly<K>)> = constants
        .par_iter()
        .flat_map_iter(|c0| {
            let mut out = Vec::new();
            let mut idx = vec![0usize; rest];
            loop {
                let mut at_one = (*c0).clone();
                let mut at_minus_one = (*c0).clone();
                for (j, &i) in idx.iter().enumerate() {
                    at_one = at_one + &values[i];
                    at_minus_one = if j % 2 == 0 { at_minus_one - &values[i] } else { at_minus_one + &values[i] };
                }
                if square_in_ring(&(d1.clone() * &at_one * &at_one + &s), ring)
                    && square_in_ring(&(dm1.clone() * &at_minus_one * &at_minus_one + &s), ring)
                {
                    let mut coeffs = vec![(*c0).clone()];
                    coeffs.extend(idx.iter().map(|&i| values[i].clone()));
                    let q = Poly::from_coeffs(coeffs);
                    if q.lead().is_some_and(|l| l.is_positive_half()) {
                        let target = &(d * &(&q * &q)) + &Poly::constant(s.clone());
                        if let Some(p) = target.sqrt_exact() {
                            if p.coeffs().iter().all(|c| c.in_ring(ring)) {
                                out.push((p.with_positive_lead(), q));
                            }
                        }
                    }
                }
                // odometer over the non-constant coefficients
                let mut pos = 0;
                while pos < rest {
                    idx[pos] += 1;
                    if idx[pos] < values.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
                if pos == rest {
                    break;
                }
            }
            out
        })
        .collect();
    found.sort_by(|(p1, q1), (p2, q2)| {
        (q1.degree(), q1.coeffs(), p1.coeffs()).cmp(&(q2.degree(), q2.coeffs(), p2.coeffs()))
    });
    found.dedup();
    Ok(found)
}
