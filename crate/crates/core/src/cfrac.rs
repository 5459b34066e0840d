//! Continued-fraction expansion of `sqrt(D(X))` at infinity.
//!
//! `zeta_i = (M_i + sqrt(D)) / N_i` is carried implicitly by the pair
//! `(M_i, N_i)`, starting from `M_0 = 0, N_0 = 1`:
//!
//! ```text
//! a_i     = polynomial part of zeta_i
//! M_{i+1} = a_i N_i - M_i
//! N_{i+1} = (D - M_{i+1}^2) / N_i      (exact)
//! ```

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::laurent::sqrt_polypart;
use crate::poly::Poly;
use crate::quad_ext::validate_radicand;

pub const DEFAULT_MAX_STEPS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CFracState<K> {
    pub index: usize,
    pub m: Poly<K>,
    pub n: Poly<K>,
}

impl<K: Field> CFracState<K> {
    pub fn initial() -> Self {
        CFracState { index: 0, m: Poly::zero(), n: Poly::one() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Period {
    /// First state index of the repeating block.
    pub start: usize,
    /// Minimal period length `r`.
    pub length: usize,
}

/// Holds `a_0`, the polynomial part of `sqrt(D)`.
///
/// Since `sqrt(D) - a_0` has negative degree, the polynomial part of
/// `(M + sqrt(D)) / N` is the Euclidean quotient of `M + a_0` by `N`; no
/// further Laurent coefficients are ever needed.
struct Stepper<'a, K> {
    d: &'a Poly<K>,
    a0: Poly<K>,
}

impl<'a, K: Field> Stepper<'a, K> {
    fn new(d: &'a Poly<K>) -> Result<Self> {
        let guard = d.degree().unwrap_or(0) + 4;
        let (a0, _) = sqrt_polypart(d, guard)?;
        Ok(Stepper { d, a0 })
    }

    fn step(&self, state: &CFracState<K>) -> Result<(Poly<K>, CFracState<K>)> {
        if state.n.is_zero() {
            return Err(Error::Domain("N_i must be nonzero"));
        }
        let (a, _) = (&state.m + &self.a0).div_rem(&state.n)?;
        let m = &(&a * &state.n) - &state.m;
        let (n, rem) = (self.d - &(&m * &m)).div_rem(&state.n)?;
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "N_{} does not divide D - M_{}^2 (remainder {rem})",
                state.index,
                state.index + 1
            )));
        }
        Ok((a, CFracState { index: state.index + 1, m, n }))
    }
}

/// One step of the recurrence: returns `a_i` and the state `i + 1`.
pub fn cfrac_step<K: Field>(state: &CFracState<K>, d: &Poly<K>) -> Result<(Poly<K>, CFracState<K>)> {
    Stepper::new(d)?.step(state)
}

#[derive(Clone, Debug)]
pub struct CFracExpansion<K> {
    d: Poly<K>,
    quotients: Vec<Poly<K>>,
    /// `states[i] = (M_i, N_i)`; always one longer than `quotients`.
    states: Vec<(Poly<K>, Poly<K>)>,
    period: Option<Period>,
}

/// Expands `sqrt(d)` until a state pair repeats or `max_steps` steps are taken.
pub fn cfrac_expand<K: Field>(d: &Poly<K>, max_steps: usize) -> Result<CFracExpansion<K>> {
    validate_radicand(d)?;
    let stepper = Stepper::new(d)?;
    let mut state = CFracState::initial();
    let mut exp = CFracExpansion {
        d: d.clone(),
        quotients: Vec::new(),
        states: vec![(state.m.clone(), state.n.clone())],
        period: None,
    };
    for _ in 0..max_steps {
        let (a, next) = stepper.step(&state)?;
        exp.quotients.push(a);
        // Linear scan rather than hashing: BigRational's Hash walks a
        // continued fraction of every coefficient, which dominates the cost
        // once heights grow. Unequal states differ in the first limb or two.
        let repeat = exp.states.iter().position(|(m, n)| *m == next.m && *n == next.n);
        exp.states.push((next.m.clone(), next.n.clone()));
        if let Some(start) = repeat {
            exp.period = Some(Period { start, length: next.index - start });
            break;
        }
        state = next;
    }
    Ok(exp)
}

fn sign(exp: i64) -> i32 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl<K: Field> CFracExpansion<K> {
    pub fn d_poly(&self) -> &Poly<K> {
        &self.d
    }

    pub fn period(&self) -> Option<Period> {
        self.period
    }

    /// Partial quotients computed so far (`a_0 ..`).
    pub fn quotients(&self) -> &[Poly<K>] {
        &self.quotients
    }

    /// The repeating block of partial quotients, when a period was found.
    pub fn periodic_quotients(&self) -> Option<&[Poly<K>]> {
        self.period.map(|p| &self.quotients[p.start..p.start + p.length])
    }

    pub fn a0(&self) -> &Poly<K> {
        &self.quotients[0]
    }

    fn wrap(&self, i: usize, available: usize) -> Result<usize> {
        if i < available {
            return Ok(i);
        }
        match self.period {
            Some(p) if i >= p.start => Ok(p.start + (i - p.start) % p.length),
            _ => Err(Error::OutOfRange { index: i, available }),
        }
    }

    /// `a_i`, continued periodically past the computed range.
    pub fn quotient(&self, i: usize) -> Result<&Poly<K>> {
        Ok(&self.quotients[self.wrap(i, self.quotients.len())?])
    }

    /// `(M_i, N_i)`, continued periodically past the computed range.
    pub fn state(&self, i: usize) -> Result<CFracState<K>> {
        let (m, n) = &self.states[self.wrap(i, self.states.len())?];
        Ok(CFracState { index: i, m: m.clone(), n: n.clone() })
    }

    /// Convergents `(H_t, K_t)` for `t = 0..=n`, from `H_{-1} = 1, H_{-2} = 0,
    /// K_{-1} = 0, K_{-2} = 1`.
    pub fn convergents_upto(&self, n: usize) -> Result<Vec<(Poly<K>, Poly<K>)>> {
        let mut out = Vec::with_capacity(n + 1);
        let (mut h2, mut h1) = (Poly::zero(), Poly::one());
        let (mut k2, mut k1) = (Poly::one(), Poly::zero());
        for t in 0..=n {
            let a = self.quotient(t)?;
            let h = &(a * &h1) + &h2;
            let k = &(a * &k1) + &k2;
            out.push((h.clone(), k.clone()));
            (h2, h1) = (h1, h);
            (k2, k1) = (k1, k);
        }
        Ok(out)
    }

    pub fn convergents(&self, n: usize) -> Result<(Poly<K>, Poly<K>)> {
        Ok(self.convergents_upto(n)?.pop().expect("n + 1 entries"))
    }

    /// `H_n^2 - D K_n^2`, checked against `(-1)^(n-1) N_{n+1}`.
    pub fn check_pell_identity(&self, n: usize) -> Result<Poly<K>> {
        let (h, k) = self.convergents(n)?;
        self.pell_identity_for(n, &h, &k)
    }

    fn pell_identity_for(&self, n: usize, h: &Poly<K>, k: &Poly<K>) -> Result<Poly<K>> {
        let lhs = &(h * h) - &(&self.d * &(k * k));
        let rhs = self.state(n + 1)?.n.scale(&K::from_int(sign(n as i64 - 1) as i64));
        if lhs != rhs {
            return Err(Error::Internal(format!("H_{n}^2 - D K_{n}^2 = {lhs}, expected {rhs}")));
        }
        Ok(lhs)
    }

    /// Runs [`Self::check_pell_identity`] for every `n` in `0..=upto`.
    pub fn check_pell_identities(&self, upto: usize) -> Result<Vec<Poly<K>>> {
        self.convergents_upto(upto)?
            .iter()
            .enumerate()
            .map(|(n, (h, k))| self.pell_identity_for(n, h, k))
            .collect()
    }

    /// `H_n K_{n-1} - K_n H_{n-1}`, checked to equal `(-1)^(n-1)`.
    pub fn determinant_identity(&self, n: usize) -> Result<i32> {
        let table = self.convergents_upto(n)?;
        let (h, k) = &table[n];
        let (hp, kp) = if n == 0 { (Poly::one(), Poly::zero()) } else { table[n - 1].clone() };
        let det = &(h * &kp) - &(k * &hp);
        let want = sign(n as i64 - 1);
        if det != Poly::constant(K::from_int(want as i64)) {
            return Err(Error::Internal(format!("H_{n} K_{} - K_{n} H_{} = {det}", n as i64 - 1, n as i64 - 1)));
        }
        Ok(want)
    }

    /// The convergent at index `n r - 1` together with the sign `(-1)^(n r)`
    /// of its norm, verified against `N_{n r} = 1`.
    pub fn period_solution(&self, multiple: usize) -> Result<(Poly<K>, Poly<K>, i32)> {
        let r = self.period.ok_or(Error::NoPeriod(self.quotients.len()))?.length;
        if multiple == 0 {
            return Err(Error::Domain("period multiple must be positive"));
        }
        let idx = multiple * r - 1;
        let (h, k) = self.convergents(idx)?;
        let boundary = self.state(idx + 1)?.n;
        if !boundary.is_one() {
            return Err(Error::Internal(format!("N_{} = {boundary}, expected 1", idx + 1)));
        }
        let s = sign((multiple * r) as i64);
        let norm = &(&h * &h) - &(&self.d * &(&k * &k));
        if norm != Poly::constant(K::from_int(s as i64)) {
            return Err(Error::Internal(format!("period convergent has norm {norm}")));
        }
        Ok((h, k, s))
    }
}
