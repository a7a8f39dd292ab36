//! `log xi(N)` at integers against its Stirling approximation.
//!
//! From `xi(N) = (1/2) N (N-1) pi^(-N/2) Gamma(N/2) zeta(N)` Stirling gives
//! `(N/2) log N + (N/2)(-log 2 - 1) + (3/2) log N - (N/2) log pi + O(1)`.
//! The "verbatim" approximation drops the `log pi` term, the "corrected"
//! one keeps it.

use crate::error::{Error, Result};
use crate::kernel::{constants, log_gamma, zeta_em, BigComplex, BigReal};

/// `log xi(s)` for real `s > 0`; `xi(1) = 1/2`.
pub fn log_xi(s: &BigReal, prec: u32) -> Result<BigReal> {
    if !s.is_positive() {
        return Err(Error::Domain(format!("log xi needs s > 0, got {}", s.to_f64())));
    }
    let work = prec + 32;
    let c = constants(work)?;
    let s = s.with_prec(work);
    let minus_log2 = -&c.log2;
    if s == 1.0 {
        return Ok(minus_log2.with_prec(prec));
    }
    let zeta = zeta_em(&BigComplex::from_real(s.clone()), work)?.re;
    // (s - 1) zeta(s) > 0 on both sides of the pole
    let h = &(&s - 1) * &zeta;
    let value = minus_log2 + s.ln() + h.ln() - &(&(&s * &c.logpi) / 2) + log_gamma(&(&s / 2))?;
    Ok(value.with_prec(prec))
}

#[derive(Debug, Clone)]
pub struct AsymptoticRow {
    pub n: u64,
    pub exact: BigReal,
    pub approx_verbatim: BigReal,
    pub approx_corrected: BigReal,
    /// `approx_verbatim - exact`.
    pub err_verbatim: BigReal,
    /// `approx_corrected - exact`.
    pub err_corrected: BigReal,
}

pub fn asymptotic_logxi(n_min: u64, n_max: u64, prec: u32) -> Result<Vec<AsymptoticRow>> {
    if n_min < 2 {
        return Err(Error::InvalidArgument(format!("N must be at least 2, got {n_min}")));
    }
    if n_max < n_min {
        return Err(Error::InvalidArgument(format!("empty range {n_min}..={n_max}")));
    }
    let c = constants(prec)?;
    (n_min..=n_max)
        .map(|n| {
            let big_n = BigReal::from_u64(n, prec);
            let half_n = &big_n / 2;
            let log_n = big_n.ln();
            let exact = log_xi(&big_n, prec)?;
            let approx_verbatim = &(&half_n * &log_n) - &(&half_n * &(&c.log2 + 1))
                + &(&(&log_n * 3) / 2);
            let approx_corrected = &approx_verbatim - &(&half_n * &c.logpi);
            Ok(AsymptoticRow {
                n,
                err_verbatim: &approx_verbatim - &exact,
                err_corrected: &approx_corrected - &exact,
                exact,
                approx_verbatim,
                approx_corrected,
            })
        })
        .collect()
}
