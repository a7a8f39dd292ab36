//! Mathematical constants at a requested precision and exact Bernoulli numbers.
//!
//! Every value is computed on demand; nothing beyond test fixtures is
//! hard-coded. Constants are cached per precision level.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use once_cell::sync::Lazy;
use rug::float::Constant;
use rug::{Float, Integer, Rational};

use super::real::{BigReal, MIN_PREC};
use crate::error::{Error, Result};

/// Constants shared by the kernels at one precision level.
#[derive(Debug, Clone)]
pub struct Constants {
    pub prec: u32,
    pub gamma: BigReal,
    pub pi: BigReal,
    pub log2: BigReal,
    pub logpi: BigReal,
    pub log2pi: BigReal,
}

static CACHE: Lazy<RwLock<HashMap<u32, Arc<Constants>>>> = Lazy::new(Default::default);

/// Cached constants at `prec` bits. Concurrent first calls may both compute
/// the set; the first inserted wins and the values are identical anyway.
pub fn constants(prec: u32) -> Result<Arc<Constants>> {
    check_prec(prec)?;
    if let Some(c) = CACHE.read().expect("constants cache poisoned").get(&prec) {
        return Ok(Arc::clone(c));
    }
    let fresh = Arc::new(compute_constants(prec));
    let mut guard = CACHE.write().expect("constants cache poisoned");
    Ok(Arc::clone(guard.entry(prec).or_insert(fresh)))
}

fn check_prec(prec: u32) -> Result<()> {
    if prec < MIN_PREC {
        return Err(Error::InvalidArgument(format!(
            "precision {prec} bits is below the minimum of {MIN_PREC}"
        )));
    }
    Ok(())
}

fn compute_constants(prec: u32) -> Constants {
    let pi = BigReal::from_float(Float::with_val(prec, Constant::Pi));
    let log2 = BigReal::from_float(Float::with_val(prec, Constant::Log2));
    let logpi = pi.ln();
    let log2pi = &log2 + &logpi;
    Constants {
        prec,
        gamma: brent_mcmillan(prec),
        pi,
        log2,
        logpi,
        log2pi,
    }
}

/// Euler-Mascheroni constant accurate to at least `prec - 8` bits.
pub fn euler_gamma(prec: u32) -> Result<BigReal> {
    Ok(constants(prec)?.gamma.clone())
}

/// Brent-McMillan: gamma = U/V with
/// U = sum (n^k/k!)^2 (H_k - ln n), V = sum (n^k/k!)^2, truncation error ~ e^(-4n).
fn brent_mcmillan(prec: u32) -> BigReal {
    let n = ((prec as f64 + 16.0) * std::f64::consts::LN_2 / 4.0).ceil() as u64 + 1;
    // alpha = 4.9706... solves alpha (ln alpha - 1) = 3.
    let terms = (4.970_626 * n as f64).ceil() as u64 + 1;
    let work = prec + 32 + 2 * (64 - terms.leading_zeros());

    let n_sq = Integer::from(n) * n;
    let ln_n = Float::with_val(work, n).ln();
    let mut a = Float::with_val(work, -&ln_n);
    let mut b = Float::with_val(work, 1);
    let mut u = a.clone();
    let mut v = b.clone();
    for k in 1..=terms {
        let k_sq = Integer::from(k) * k;
        b *= &n_sq;
        b /= &k_sq;
        a *= &n_sq;
        a /= k;
        a += &b;
        a /= k;
        u += &a;
        v += &b;
    }
    BigReal::from_float(Float::with_val(prec, u / v))
}

static BERNOULLI: Lazy<Mutex<Vec<Rational>>> = Lazy::new(|| Mutex::new(vec![Rational::from(1)]));

/// Exact Bernoulli number `B_index` (convention `B_1 = -1/2`) for even `index >= 2`.
pub fn bernoulli(index: u32) -> Result<Rational> {
    if index < 2 || index % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "Bernoulli index must be even and >= 2, got {index}"
        )));
    }
    Ok(bernoulli_any(index as usize))
}

/// `B_m` for any `m`, from sum_{k=0}^{m} C(m+1, k) B_k = 0, cached.
pub(crate) fn bernoulli_any(m: usize) -> Rational {
    let mut table = BERNOULLI.lock().expect("bernoulli cache poisoned");
    while table.len() <= m {
        let next = table.len();
        let value = if next > 1 && next % 2 == 1 {
            Rational::new()
        } else {
            let mut acc = Rational::new();
            let mut binom = Integer::from(1);
            for (k, b_k) in table.iter().enumerate() {
                if b_k.cmp0() != std::cmp::Ordering::Equal {
                    acc += Rational::from(&binom * b_k.numer()) / b_k.denom();
                }
                // C(next+1, k+1) from C(next+1, k)
                binom *= next + 1 - k;
                binom /= k + 1;
            }
            -acc / (next as u64 + 1)
        };
        table.push(value);
    }
    table[m].clone()
}

/// `B_{2j} / (2j)!` rounded to `prec` bits.
pub(crate) fn bernoulli_over_factorial(j: u32, prec: u32) -> BigReal {
    let b = bernoulli_any(2 * j as usize);
    let f = Integer::from(Integer::factorial(2 * j));
    BigReal::from_rational(&(b / f), prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_gamma(prec: u32) -> BigReal {
        BigReal::from_float(Float::with_val(prec, Constant::Euler))
    }

    #[test]
    fn gamma_64_bits() {
        let g = euler_gamma(64).unwrap();
        assert!((g.to_f64() - 0.5772156649).abs() < 1e-10);
    }

    #[test]
    fn gamma_matches_mpfr_at_several_precisions() {
        for prec in [64u32, 200, 512, 1000] {
            let g = euler_gamma(prec).unwrap();
            let diff = (&g - &reference_gamma(prec + 64)).abs();
            assert!(diff.abs_below_pow2(-(prec as i32 - 8)), "prec {prec}: {diff:?}");
        }
    }

    #[test]
    fn gamma_refinement_is_consistent() {
        let lo = euler_gamma(64).unwrap();
        let hi = euler_gamma(256).unwrap();
        assert!((&lo - &hi).abs_below_pow2(-56));
    }

    #[test]
    fn gamma_rejects_low_precision() {
        assert!(matches!(euler_gamma(32), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn harmonic_limit_oracle() {
        // gamma = H_m - ln m - 1/(2m) + O(1/m^2)
        let m = 1_000_000u64;
        let prec = 128;
        let mut h = Float::new(prec);
        for k in (1..=m).rev() {
            h += Float::with_val(prec, k).recip();
        }
        let approx = h - Float::with_val(prec, m).ln() - Float::with_val(prec, 2 * m).recip();
        let g = euler_gamma(prec).unwrap();
        let err = (approx.to_f64() - g.to_f64()).abs();
        // next term of the expansion is 1/(12 m^2)
        assert!(err < 1.0 / (10.0 * (m as f64).powi(2)), "{err}");
    }

    #[test]
    fn bernoulli_known_values() {
        assert_eq!(bernoulli(2).unwrap(), Rational::from((1, 6)));
        assert_eq!(bernoulli(4).unwrap(), Rational::from((-1, 30)));
        assert_eq!(bernoulli(12).unwrap(), Rational::from((-691, 2730)));
        assert_eq!(bernoulli_any(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli_any(7), Rational::new());
    }

    #[test]
    fn bernoulli_rejects_odd_or_small_index() {
        assert!(bernoulli(3).is_err());
        assert!(bernoulli(0).is_err());
        assert!(bernoulli(1).is_err());
    }

    #[test]
    fn bernoulli_recurrence_holds() {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m = 30
        let m = 30usize;
        let mut acc = Rational::new();
        for k in 0..=m {
            let c = Integer::from(Integer::binomial_u(m as u32 + 1, k as u32));
            acc += Rational::from(c) * bernoulli_any(k);
        }
        assert_eq!(acc, Rational::new());
    }

    #[test]
    fn derived_constants() {
        let c = constants(128).unwrap();
        assert!((c.logpi.to_f64() - std::f64::consts::PI.ln()).abs() < 1e-15);
        assert!((c.log2pi.to_f64() - (2.0 * std::f64::consts::PI).ln()).abs() < 1e-15);
        assert!(Arc::ptr_eq(&c, &constants(128).unwrap()));
    }
}
