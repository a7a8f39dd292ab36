//! Riemann zeta by Euler-Maclaurin summation:
//!
//! zeta(s) = sum_{k<K} k^-s + K^(1-s)/(s-1) + K^-s/2
//!         + sum_{j=1}^{J} B_2j/(2j)! s(s+1)...(s+2j-2) K^(-s-2j+1) + R_J.

use super::complex::BigComplex;
use super::constants::bernoulli_over_factorial;
use super::real::BigReal;
use crate::error::{Error, Result};

/// Distance from `s = 1` inside which evaluation is refused.
pub const POLE_EXCLUSION_LOG2: i32 = -16;

/// Largest number of Bernoulli correction terms before `K` is doubled.
pub const MAX_TAIL_TERMS: u32 = 64;

/// Cap on the direct-sum length.
pub const MAX_TERMS: usize = 1 << 22;

const GUARD_BITS: u32 = 40;

/// Parameters an evaluation settled on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZetaParams {
    /// Direct-sum cutoff `K`.
    pub terms: usize,
    /// Number of Bernoulli correction terms `J`.
    pub tail_terms: u32,
}

/// `zeta(s)` to about `prec` bits, verified by recomputation with `K` doubled.
pub fn zeta_em(s: &BigComplex, prec: u32) -> Result<BigComplex> {
    ZetaEvaluator::new(prec).eval(s)
}

/// Euler-Maclaurin evaluator with a fixed target precision.
#[derive(Debug, Clone, Copy)]
pub struct ZetaEvaluator {
    prec: u32,
    verify: bool,
}

impl ZetaEvaluator {
    pub fn new(prec: u32) -> Self {
        ZetaEvaluator { prec, verify: true }
    }

    /// Skip the doubled-`K` recomputation. Callers that validate results by
    /// other means (grid refinement, precision doubling) use this.
    pub fn unverified(prec: u32) -> Self {
        ZetaEvaluator {
            prec,
            verify: false,
        }
    }

    pub fn eval(&self, s: &BigComplex) -> Result<BigComplex> {
        self.eval_with_params(s).map(|(z, _)| z)
    }

    pub fn eval_with_params(&self, s: &BigComplex) -> Result<(BigComplex, ZetaParams)> {
        let s_minus_one = s.add_i64(-1);
        if s_minus_one.abs().abs_below_pow2(POLE_EXCLUSION_LOG2) {
            return Err(Error::Pole(format!(
                "zeta evaluated within 2^{POLE_EXCLUSION_LOG2} of s = 1"
            )));
        }

        let im_abs = s.im.abs().to_f64().ceil() as usize;
        let mut terms = (self.prec as usize / 2).max(im_abs + 1).max(8);
        let threshold = -(self.prec as i32 + 8);
        let mut state: Option<(BigComplex, BigComplex, PowerTable)> = None;

        loop {
            if terms > MAX_TERMS {
                return Err(Error::PrecisionFailure(format!(
                    "Euler-Maclaurin did not converge with K <= {MAX_TERMS}"
                )));
            }
            // For Re s < 1 the partial sums grow like K^(1 - Re s) and cancel.
            let work = self.prec + GUARD_BITS + growth_bits(s, 2 * terms);
            if state.as_ref().is_none_or(|(ws, _, _)| ws.prec() < work) {
                let ws = s.with_prec(work);
                let wm = ws.add_i64(-1);
                let table = PowerTable::new(&ws, work);
                state = Some((ws, wm, table));
            }
            let (ws, wm, powers) = state.as_mut().expect("initialized above");

            let Some((value, tail_terms)) = em_sum(ws, wm, terms, powers, threshold) else {
                terms *= 2;
                continue;
            };
            let params = ZetaParams { terms, tail_terms };
            if !self.verify {
                return Ok((value.with_prec(self.prec), params));
            }
            let Some((check, _)) = em_sum(ws, wm, 2 * terms, powers, threshold) else {
                terms *= 2;
                continue;
            };
            let scale = value.abs().to_f64().max(1.0).log2().ceil() as i32;
            if (&check - &value).abs().abs_below_pow2(-(self.prec as i32) + scale) {
                return Ok((check.with_prec(self.prec), params));
            }
            terms *= 2;
        }
    }
}

fn growth_bits(s: &BigComplex, terms: usize) -> u32 {
    let sigma = s.re.to_f64();
    if sigma >= 1.0 {
        return 0;
    }
    ((1.0 - sigma) * (terms as f64).log2()).ceil() as u32
}

/// Returns `None` when `MAX_TAIL_TERMS` corrections do not reach `2^threshold`.
fn em_sum(
    s: &BigComplex,
    s_minus_one: &BigComplex,
    terms: usize,
    powers: &mut PowerTable,
    threshold: i32,
) -> Option<(BigComplex, u32)> {
    let work = s.prec();
    powers.extend_to(terms);

    let mut acc = BigComplex::zero(work);
    for p in &powers.values[1..terms] {
        acc = &acc + p;
    }
    let k_pow = &powers.values[terms];
    let k = BigReal::from_u64(terms as u64, work);
    acc = &acc + &(&k_pow.scale(&k) / s_minus_one);
    acc = &acc + &k_pow.div_i64(2);

    // P_1 = s K^(-s-1); P_{j+1} = P_j (s+2j-1)(s+2j) / K^2
    let k_sq = &k * &k;
    let mut rising = &(s * k_pow) / &BigComplex::from_real(k.clone());
    for j in 1..=MAX_TAIL_TERMS {
        let term = rising.scale(&bernoulli_over_factorial(j, work));
        if term.abs().abs_below_pow2(threshold) {
            return Some((acc, j - 1));
        }
        acc = &acc + &term;
        let a = s.add_i64(2 * j as i64 - 1);
        let b = s.add_i64(2 * j as i64);
        rising = (&(&rising * &a) * &b).scale(&k_sq.recip());
    }
    None
}

/// `k^-s` for `k = 0..=n`, using `(ab)^-s = a^-s b^-s` so only primes need
/// a transcendental evaluation.
struct PowerTable {
    s: BigComplex,
    prec: u32,
    smallest_factor: Vec<usize>,
    values: Vec<BigComplex>,
}

impl PowerTable {
    fn new(s: &BigComplex, prec: u32) -> Self {
        PowerTable {
            s: s.clone(),
            prec,
            smallest_factor: vec![0, 1],
            values: vec![BigComplex::zero(prec), BigComplex::one(prec)],
        }
    }

    fn extend_to(&mut self, n: usize) {
        if n < self.values.len() {
            return;
        }
        self.sieve(n);
        for k in self.values.len()..=n {
            let p = self.smallest_factor[k];
            let v = if p == k {
                self.s.neg_pow_of(&BigReal::from_u64(k as u64, self.prec).ln())
            } else {
                &self.values[p] * &self.values[k / p]
            };
            self.values.push(v);
        }
    }

    fn sieve(&mut self, n: usize) {
        let mut spf: Vec<usize> = (0..=n).collect();
        let mut i = 2;
        while i * i <= n {
            if spf[i] == i {
                let mut j = i * i;
                while j <= n {
                    if spf[j] == j {
                        spf[j] = i;
                    }
                    j += i;
                }
            }
            i += 1;
        }
        self.smallest_factor = spf;
    }
}
