//! Keiper-Li coefficients and their split into trend and tiny parts.
//!
//! With `s = 1/(1-z)` and `u = s - 1 = z/(1-z)`,
//!
//! log xi(s) - log(1/2) = T(z) + log((s-1) zeta(s))
//!
//! where the trend is
//! `T(z) = log(1/(1-z)) - (u/2) log pi + log Gamma(1/2 + u/2) - log Gamma(1/2)`
//! and the tiny part `log h(u)`, `h(u) = u zeta(1+u)`, is driven by the
//! Stieltjes constants. `lambda_n = n [z^n]` of the left-hand side.
//!
//! Every coefficient family is produced by two routes (binomial pullback and
//! series composition with `u(z)`) that must agree.

pub mod stieltjes;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::{constants, BigComplex, BigReal, ZetaEvaluator};
use crate::series::{TruncatedSeries, Variable};

pub use stieltjes::{stieltjes, stieltjes_with, StieltjesConfig, StieltjesSet, DEFAULT_RADIUS};

/// Precision used when none is requested: `max(256, 2 n_max + 64)` bits.
pub fn default_precision(n_max: usize) -> u32 {
    256.max(2 * n_max as u32 + 64)
}

/// Relative agreement demanded between two routes to the same coefficient.
const ROUTE_SLACK_BITS: i32 = 16;

fn agree(a: &BigReal, b: &BigReal, prec: u32) -> bool {
    let scale = a.abs().to_f64().max(1.0).log2().ceil() as i32;
    (a - b).abs_below_pow2(scale - (prec as i32 - ROUTE_SLACK_BITS))
}

fn check_routes(what: &str, first: &[BigReal], second: &[BigReal], prec: u32) -> Result<()> {
    for (i, (a, b)) in first.iter().zip(second).enumerate() {
        if !agree(a, b, prec) {
            return Err(Error::Consistency(format!(
                "{what} coefficient n = {}: routes disagree ({} vs {})",
                i + 1,
                a.to_f64(),
                b.to_f64()
            )));
        }
    }
    Ok(())
}

/// `n * c_n` for `n = 1 ..= n_max`, rounded to `prec`.
fn weighted(series: &TruncatedSeries, n_max: usize, prec: u32) -> Vec<BigReal> {
    (1..=n_max)
        .map(|n| (&series.coeffs()[n] * n as i64).with_prec(prec))
        .collect()
}

/// `log h(u)` to order `order`, with the Stieltjes data it was built from.
pub fn tiny_u_series(order: usize, prec: u32, config: &StieltjesConfig) -> Result<(TruncatedSeries, StieltjesSet)> {
    let set = stieltjes_with(order.max(1), prec, config)?;
    Ok((tiny_series_from(&set, order)?, set))
}

#[derive(Debug, Clone)]
pub struct TinyCoefficients {
    /// `lambda_tiny(n)` at index `n - 1`.
    pub values: Vec<BigReal>,
    pub stieltjes: StieltjesSet,
}

pub fn tiny_coefficients(n_max: usize, prec: u32) -> Result<Vec<BigReal>> {
    Ok(tiny_coefficients_with(n_max, prec, &StieltjesConfig::default())?.values)
}

pub fn tiny_coefficients_with(n_max: usize, prec: u32, config: &StieltjesConfig) -> Result<TinyCoefficients> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let (log_h, set) = tiny_u_series(n_max, prec, config)?;
    let pulled = TruncatedSeries::binomial_pullback(&log_h, n_max)?;
    let composed = TruncatedSeries::compose(&log_h, &TruncatedSeries::u_of_z(n_max, set.working_prec))?;
    let values = weighted(&pulled, n_max, prec);
    check_routes("tiny", &values, &weighted(&composed, n_max, prec), prec)?;
    Ok(TinyCoefficients { values, stieltjes: set })
}

fn trend_guard_bits(order: usize) -> u32 {
    order as u32 + 48
}

/// Taylor coefficients `g_1 .. g_order` (index 0 is zero) of
/// `log Gamma(1/2 + w) - log Gamma(1/2)`:
/// `g_1 = -(gamma + 2 log 2)`, `g_k = (-1)^k (2^k - 1) zeta(k) / k`.
fn log_gamma_half_coefficients(order: usize, work: u32) -> Result<Vec<BigReal>> {
    let c = constants(work)?;
    let zetas: Vec<BigReal> = (2..=order)
        .into_par_iter()
        .map(|k| {
            let s = BigComplex::from_real(BigReal::from_u64(k as u64, work));
            ZetaEvaluator::new(work).eval(&s).map(|z| z.re)
        })
        .collect::<Result<_>>()?;
    let mut g = Vec::with_capacity(order + 1);
    g.push(BigReal::zero(work));
    if order >= 1 {
        g.push(-(&c.gamma + &(&c.log2 * 2)));
    }
    for (i, zeta) in zetas.into_iter().enumerate() {
        let k = i + 2;
        let two_k = BigReal::pow2(k as i32, work) - 1;
        let term = &(&two_k * &zeta) / k as i64;
        g.push(if k % 2 == 0 { term } else { -term });
    }
    Ok(g)
}

/// Trend part as a series in `u`:
/// `log(1+u) - (log pi / 2) u + sum_k g_k (u/2)^k`.
pub fn trend_u_series(order: usize, prec: u32) -> Result<TruncatedSeries> {
    let work = prec + trend_guard_bits(order);
    let g = log_gamma_half_coefficients(order, work)?;
    trend_u_from(&g, work)
}

fn trend_u_from(g: &[BigReal], work: u32) -> Result<TruncatedSeries> {
    let c = constants(work)?;
    let order = g.len() - 1;
    let mut coeffs = vec![BigReal::zero(work)];
    for (k, g_k) in g.iter().enumerate().skip(1) {
        let log_term = &BigReal::one(work) / k as i64;
        let log_term = if k % 2 == 1 { log_term } else { -log_term };
        let mut t = &log_term + &(g_k * &BigReal::pow2(-(k as i32), work));
        if k == 1 {
            t -= &(&c.logpi / 2);
        }
        coeffs.push(t);
    }
    debug_assert_eq!(coeffs.len(), order + 1);
    Ok(TruncatedSeries::new(Variable::U, coeffs))
}

/// Trend part composed directly in `z` with `w(z) = u(z)/2 = sum z^n / 2`.
fn trend_z_from(g: &[BigReal], order: usize, work: u32) -> Result<TruncatedSeries> {
    let c = constants(work)?;
    let half = BigReal::pow2(-1, work);
    let w = TruncatedSeries::u_of_z(order, work).scale(&half);
    let outer = TruncatedSeries::new(Variable::U, g.to_vec());
    let gamma_part = TruncatedSeries::compose(&outer, &w)?;
    let mut coeffs = gamma_part.into_coeffs();
    let linear = &c.logpi * &half;
    for (n, coeff) in coeffs.iter_mut().enumerate().skip(1) {
        *coeff += &(&BigReal::one(work) / n as i64);
        *coeff -= &linear;
    }
    Ok(TruncatedSeries::new(Variable::Z, coeffs))
}

pub fn trend_coefficients(n_max: usize, prec: u32) -> Result<Vec<BigReal>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let work = prec + trend_guard_bits(n_max);
    let g = log_gamma_half_coefficients(n_max, work)?;
    trend_checked(&g, n_max, prec, work)
}

fn trend_checked(g: &[BigReal], n_max: usize, prec: u32, work: u32) -> Result<Vec<BigReal>> {
    let composed = trend_z_from(g, n_max, work)?;
    let values = weighted(&composed, n_max, prec);
    let pulled = TruncatedSeries::binomial_pullback(&trend_u_from(g, work)?, n_max)?;
    check_routes("trend", &values, &weighted(&pulled, n_max, prec), prec)?;
    Ok(values)
}

#[derive(Debug, Clone)]
pub struct LiRow {
    pub n: usize,
    pub lambda: BigReal,
    pub trend: BigReal,
    pub tiny: BigReal,
}

#[derive(Debug, Clone)]
pub struct LiTable {
    pub rows: Vec<LiRow>,
    pub prec_bits: u32,
    pub working_prec: u32,
    pub circle_radius: f64,
    pub dft_points: usize,
}

impl LiTable {
    pub fn lambda(&self, n: usize) -> Option<&BigReal> {
        self.rows.get(n.checked_sub(1)?).map(|r| &r.lambda)
    }
}

pub fn li_coefficients(n_max: usize, prec: u32) -> Result<LiTable> {
    li_coefficients_with(n_max, prec, &StieltjesConfig::default())
}

/// `lambda_n`, trend and tiny parts for `n = 1 ..= n_max`. The full value is
/// also pulled back from the summed `u`-series and must match
/// `trend + tiny`.
pub fn li_coefficients_with(n_max: usize, prec: u32, config: &StieltjesConfig) -> Result<LiTable> {
    if n_max == 0 {
        config.validate()?;
        return Ok(LiTable {
            rows: Vec::new(),
            prec_bits: prec,
            working_prec: prec,
            circle_radius: config.radius,
            dft_points: 0,
        });
    }
    let tiny = tiny_coefficients_with(n_max, prec, config)?;
    let work = tiny.stieltjes.working_prec.max(prec + trend_guard_bits(n_max));
    let g = log_gamma_half_coefficients(n_max, work)?;
    let trend = trend_checked(&g, n_max, prec, work)?;

    let log_h = tiny_series_from(&tiny.stieltjes, n_max)?;
    let total_u = trend_u_from(&g, work)?.add(&log_h)?;
    let full = weighted(&TruncatedSeries::binomial_pullback(&total_u, n_max)?, n_max, prec);

    let mut rows = Vec::with_capacity(n_max);
    for (i, ((lambda, t), s)) in full.into_iter().zip(trend).zip(tiny.values).enumerate() {
        let sum = &t + &s;
        if !agree(&lambda, &sum, prec) {
            return Err(Error::Consistency(format!(
                "lambda_{} = {} but trend + tiny = {}",
                i + 1,
                lambda.to_f64(),
                sum.to_f64()
            )));
        }
        rows.push(LiRow {
            n: i + 1,
            lambda,
            trend: t,
            tiny: s,
        });
    }
    Ok(LiTable {
        rows,
        prec_bits: prec,
        working_prec: work,
        circle_radius: tiny.stieltjes.circle_radius,
        dft_points: tiny.stieltjes.dft_points,
    })
}

fn tiny_series_from(set: &StieltjesSet, order: usize) -> Result<TruncatedSeries> {
    Ok(set.h_series().log()?.truncate(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::euler_gamma;

    fn close(x: &BigReal, expected: f64, tol: f64) -> bool {
        (x.to_f64() - expected).abs() < tol
    }

    #[test]
    fn first_coefficients() {
        let prec = 256;
        let table = li_coefficients(6, prec).unwrap();
        let g = euler_gamma(prec).unwrap();
        // tiny part of lambda_1 is exactly gamma
        assert!((&table.rows[0].tiny - &g).abs_below_pow2(-(prec as i32 - 20)));
        let c = constants(prec).unwrap();
        let pi4 = (&c.pi * 4).ln();
        let expected_trend = BigReal::one(prec) - &(&g / 2) - &(&pi4 / 2);
        assert!((&table.rows[0].trend - &expected_trend).abs_below_pow2(-(prec as i32 - 20)));
        assert!(close(&table.rows[0].lambda, 0.023095708966121, 1e-14));
        // mpmath, taylor of log((s-1) zeta(s)) on a circle, then the u -> z pullback
        assert!(close(&table.rows[1].tiny, 0.9668850969627, 1e-12));
        assert!(close(&table.rows[4].tiny, 1.45826850019717, 1e-13));
        assert!(close(&table.rows[5].tiny, 1.48829832721222, 1e-13));
    }

    #[test]
    fn known_li_values() {
        // mpmath: n [s-1]^n of s^(n-1) log xi(s), contour Taylor coefficients
        let table = li_coefficients(3, 256).unwrap();
        assert!(close(&table.rows[1].lambda, 0.09234573522804667, 1e-15));
        assert!(close(&table.rows[2].lambda, 0.2076389205543248, 1e-15));
    }

    #[test]
    fn precision_refinement_is_consistent() {
        let lo = li_coefficients(20, 256).unwrap();
        let hi = li_coefficients(20, 512).unwrap();
        for (a, b) in lo.rows.iter().zip(&hi.rows) {
            assert!((&a.lambda - &b.lambda).abs_below_pow2(-200), "n = {}", a.n);
        }
    }

    #[test]
    fn empty_table() {
        let table = li_coefficients(0, 256).unwrap();
        assert!(table.rows.is_empty());
        assert!(table.lambda(1).is_none());
        assert!(tiny_coefficients(0, 256).is_err());
        assert!(trend_coefficients(0, 256).is_err());
    }

    #[test]
    fn default_precision_rule() {
        assert_eq!(default_precision(10), 256);
        assert_eq!(default_precision(100), 264);
    }

    #[test]
    fn trend_series_matches_log_gamma() {
        // trend_u at u = 1/8 summed against the direct value
        // log(1+u) - (u/2) log pi + log Gamma((1+u)/2) - log Gamma(1/2)
        let prec = 256;
        let order = 160;
        let t = trend_u_series(order, prec).unwrap();
        let u = BigReal::from_f64(0.125, prec + 64);
        let mut sum = BigReal::zero(prec + 64);
        let mut p = BigReal::one(prec + 64);
        for c in t.coeffs() {
            sum += &(c * &p);
            p *= &u;
        }
        let c = constants(prec + 64).unwrap();
        let half = BigReal::from_f64(0.5, prec + 64);
        let direct = (&u + 1).ln() - &(&(&u * &c.logpi) / 2)
            + crate::kernel::log_gamma(&(&half + &(&u / 2))).unwrap()
            - crate::kernel::log_gamma(&half).unwrap();
        assert!((&sum - &direct).abs_below_pow2(-(prec as i32 - 8)));
    }
}
