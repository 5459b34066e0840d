//! The decision pipeline for `P^2 - D Q^2 = ±1`.
//!
//! Every unit of `K[X, sqrt(D)]` with constant norm is `λ ε^m` for the
//! fundamental unit `ε = H_n + K_n sqrt(D)`, read off the first convergent
//! whose `N_{n+1}` is constant. With `c = N(ε)`, a solution of norm `s`
//! needs `λ^2 = s / c^m`, which depends only on the parity of `m`.
//!
//! For the ring tests: the leading coefficient of `λ P_m` squares to
//! `s ρ^m / 4` with `ρ = 4 lead(H_n)^2 / c`. If `ρ` leaves the ring, or is
//! a ring element prime to 2, that value never lies in the ring, so no
//! power is integral.

use super::mason::mason_no_solution_test;
use super::search::brute_force_search;
use super::types::{Bounds, PellScalar, PellVerdict, Reason, Ring, Sign, SolveOptions, VerdictKind};
use crate::cfrac::{cfrac_expand, CFracExpansion};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::quad_ext::{validate_radicand, PellElement};

pub fn solve_negative<K: PellScalar>(d: &Poly<K>, ring: Ring, opts: &SolveOptions) -> Result<PellVerdict<K>> {
    solve(d, ring, Sign::Neg, opts)
}

pub fn solve_positive<K: PellScalar>(d: &Poly<K>, ring: Ring, opts: &SolveOptions) -> Result<PellVerdict<K>> {
    solve(d, ring, Sign::Pos, opts)
}

struct Builder<'a, K> {
    d: &'a Poly<K>,
    ring: Ring,
    sign: Sign,
    opts: &'a SolveOptions,
    period: Option<crate::cfrac::Period>,
    searched: bool,
}

impl<K: PellScalar> Builder<'_, K> {
    fn verdict(&self, kind: VerdictKind, reason: Reason) -> PellVerdict<K> {
        PellVerdict {
            kind,
            sign: self.sign,
            ring: self.ring,
            reason,
            witness: None,
            period: self.period,
            power: None,
            bounds: Bounds {
                max_steps: self.opts.max_steps,
                max_power: self.opts.max_power,
                search: self.searched.then_some(self.opts.search),
            },
        }
    }

    /// Re-verifies the witness before it can leave the pipeline.
    fn solution(&self, p: Poly<K>, q: Poly<K>, reason: Reason, power: Option<u32>) -> Result<PellVerdict<K>> {
        let p = p.with_positive_lead();
        let q = q.with_positive_lead();
        let norm = &(&p * &p) - &(self.d * &(&q * &q));
        if q.is_zero() || norm != Poly::constant(K::from_int(self.sign.value())) {
            return Err(Error::NotASolution { p: p.to_string(), q: q.to_string(), d: self.d.to_string() });
        }
        if !p.coeffs().iter().chain(q.coeffs()).all(|c| c.in_ring(self.ring)) {
            return Err(Error::Internal(format!("witness ({p}, {q}) is not over {}", self.ring)));
        }
        let mut v = self.verdict(VerdictKind::Solution, reason);
        v.witness = Some((p, q));
        v.power = power;
        Ok(v)
    }

    fn search(&mut self) -> Result<PellVerdict<K>> {
        self.searched = true;
        let ring = if self.ring == Ring::Q { Ring::Z } else { self.ring };
        let hits = brute_force_search(self.d, ring, self.opts.search, self.sign, self.opts.candidate_cap)?;
        match hits.into_iter().next() {
            Some((p, q)) => self.solution(p, q, Reason::SearchWitness, None),
            None => Ok(self.verdict(VerdictKind::NoneWithinBounds, Reason::SearchExhausted)),
        }
    }
}

/// Decides `P^2 - D Q^2 = sign` with `Q != 0` over `ring`.
///
/// `ProvedNone` comes only from the radical bound, the parity of the unit
/// norm, or the leading-coefficient test; exhausting the search box yields
/// `NoneWithinBounds`.
pub fn solve<K: PellScalar>(d: &Poly<K>, ring: Ring, sign: Sign, opts: &SolveOptions) -> Result<PellVerdict<K>> {
    if !K::supports(ring) {
        return Err(Error::RingUnsupported("coefficient field does not cover the requested ring"));
    }
    if mason_no_solution_test(d)? {
        let b = Builder { d, ring, sign, opts, period: None, searched: false };
        return Ok(b.verdict(VerdictKind::ProvedNone, Reason::MasonRadicalBound));
    }
    validate_radicand(d)?;
    let exp = cfrac_expand(d, opts.max_steps)?;
    solve_with_expansion(&exp, ring, sign, opts)
}

/// [`solve`] on a radicand whose expansion is already at hand; lets callers
/// that need both signs, or the quotients themselves, expand only once.
pub fn solve_with_expansion<K: PellScalar>(
    exp: &CFracExpansion<K>,
    ring: Ring,
    sign: Sign,
    opts: &SolveOptions,
) -> Result<PellVerdict<K>> {
    if !K::supports(ring) {
        return Err(Error::RingUnsupported("coefficient field does not cover the requested ring"));
    }
    let d = exp.d_poly();
    // a validated radicand is squarefree, so the radical bound cannot fire here
    let mut b = Builder { d, ring, sign, opts, period: None, searched: false };
    let Some(period) = exp.period() else {
        return b.search();
    };
    b.period = Some(period);

    let limit = period.start + period.length;
    let n0 = (0..limit)
        .find(|&n| exp.state(n + 1).is_ok_and(|s| s.n.is_constant()))
        .ok_or_else(|| Error::Internal("no constant N_i inside the period".into()))?;
    let (h, k) = exp.convergents(n0)?;
    let unit = PellElement::new(h, k, d.clone())?;
    let norm = unit.norm();
    if !norm.is_constant() || norm.is_zero() {
        return Err(Error::Internal(format!("unit norm {norm} is not a nonzero constant")));
    }
    let c = norm.coeff(0);
    let s = K::from_int(sign.value());

    // λ for odd and for even powers
    let lambda_odd = (s.clone() / &c).sqrt();
    let lambda_even = (s.clone() / &(c.clone() * &c)).sqrt();
    if lambda_odd.is_none() && lambda_even.is_none() {
        return Ok(b.verdict(VerdictKind::ProvedNone, Reason::EvenPeriodNoIntegral));
    }

    if ring != Ring::Q {
        let lead = unit.p().lead().expect("unit has nonzero P").clone();
        let rho = K::from_int(4) * &lead * &lead / &c;
        if !rho.in_ring(ring) || !rho.divisible_by_two_prime(ring) {
            return Ok(b.verdict(VerdictKind::ProvedNone, Reason::LeadingCoeffNonIntegral));
        }
    }

    let odd_reason = if sign == Sign::Neg && period.length % 2 == 1 { Reason::OddPeriod } else { Reason::PeriodUnit };
    let mut power = unit.clone();
    for m in 1..=opts.max_power {
        if m > 1 {
            power = power.mul(&unit)?;
        }
        let lambda = if m % 2 == 1 { &lambda_odd } else { &lambda_even };
        let Some(lambda) = lambda else { continue };
        let cand = power.scale(lambda);
        if ring == Ring::Q || cand.p().coeffs().iter().chain(cand.q().coeffs()).all(|x| x.in_ring(ring)) {
            let reason = if m % 2 == 1 { odd_reason } else { Reason::PeriodUnit };
            let (p, q) = cand.into_parts();
            return b.solution(p, q, reason, Some(m));
        }
    }
    b.search()
}

/// The first `count` solutions of the same norm as `witness`, assumed
/// minimal: its odd powers for the negative equation, all powers otherwise.
pub fn solution_sequence<K: PellScalar>(
    d: &Poly<K>,
    witness: &(Poly<K>, Poly<K>),
    sign: Sign,
    count: usize,
) -> Result<Vec<(Poly<K>, Poly<K>)>> {
    let w = PellElement::new(witness.0.clone(), witness.1.clone(), d.clone())?;
    let step = if sign == Sign::Neg { w.mul(&w)? } else { w.clone() };
    let want = Poly::constant(K::from_int(sign.value()));
    let mut cur = w;
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        if i > 0 {
            cur = cur.mul(&step)?;
        }
        if cur.norm() != want {
            return Err(Error::NotASolution { p: cur.p().to_string(), q: cur.q().to_string(), d: d.to_string() });
        }
        out.push((cur.p().with_positive_lead(), cur.q().with_positive_lead()));
    }
    Ok(out)
}
