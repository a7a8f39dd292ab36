//! Envelopes `c n +- a sqrt(n) log n` and `c n +- a log n` around the
//! linear trend, optionally on top of `(n/2) log n`.

use super::identity::TrendConstant;
use crate::error::{Error, Result};
use crate::kernel::BigReal;

pub const DEFAULT_A_LOG: &str = "1.596";
pub const DEFAULT_A_SQRT: &str = "0.386";

#[derive(Debug, Clone)]
pub struct EnvelopeRow {
    pub n: u64,
    pub trend: BigReal,
    pub sqrt_upper: BigReal,
    pub sqrt_lower: BigReal,
    pub log_upper: BigReal,
    pub log_lower: BigReal,
}

#[derive(Debug, Clone)]
pub struct Envelope {
    pub c: BigReal,
    pub a_log: BigReal,
    pub a_sqrt: BigReal,
    pub include_main: bool,
    pub rows: Vec<EnvelopeRow>,
    /// `n` where `a_sqrt sqrt(n) log n = a_log log n`, i.e. `(a_log / a_sqrt)^2`.
    pub crossing: BigReal,
}

pub fn envelope_data(
    n_max: u64,
    a_log: &BigReal,
    a_sqrt: &BigReal,
    include_main: bool,
    trend_constant: TrendConstant,
    prec: u32,
) -> Result<Envelope> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!("n_max must be at least 2, got {n_max}")));
    }
    if !a_log.is_positive() || !a_sqrt.is_positive() {
        return Err(Error::InvalidArgument("envelope amplitudes must be positive".into()));
    }
    let c = trend_constant.value(prec)?;
    let rows = (1..=n_max)
        .map(|n| {
            let nn = BigReal::from_u64(n, prec);
            let log_n = nn.ln();
            let mut trend = &c * &nn;
            if include_main {
                trend += &(&(&nn * &log_n) / 2);
            }
            let sqrt_term = &(a_sqrt * &nn.sqrt()) * &log_n;
            let log_term = a_log * &log_n;
            EnvelopeRow {
                n,
                sqrt_upper: &trend + &sqrt_term,
                sqrt_lower: &trend - &sqrt_term,
                log_upper: &trend + &log_term,
                log_lower: &trend - &log_term,
                trend,
            }
        })
        .collect();
    let ratio = a_log / a_sqrt;
    Ok(Envelope {
        crossing: &ratio * &ratio,
        c,
        a_log: a_log.clone(),
        a_sqrt: a_sqrt.clone(),
        include_main,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn defaults(prec: u32) -> (BigReal, BigReal) {
        (
            BigReal::parse(DEFAULT_A_LOG, prec).unwrap(),
            BigReal::parse(DEFAULT_A_SQRT, prec).unwrap(),
        )
    }

    #[test]
    fn crossing_point() {
        let (al, asq) = defaults(128);
        let env = envelope_data(40, &al, &asq, false, TrendConstant::Half, 128).unwrap();
        let x = env.crossing.to_f64();
        assert!(x > 16.5 && x < 17.5);
        assert!((env.crossing.sqrt().to_f64() - 1.596 / 0.386).abs() < 1e-9);
        // the sqrt envelope is inside the log envelope before the crossing, outside after
        let r16 = &env.rows[15];
        let r18 = &env.rows[17];
        assert!(r16.sqrt_upper < r16.log_upper);
        assert!(r18.sqrt_upper > r18.log_upper);
    }

    #[test]
    fn first_row_and_trend() {
        let (al, asq) = defaults(128);
        let env = envelope_data(5, &al, &asq, false, TrendConstant::Half, 128).unwrap();
        let first = &env.rows[0];
        assert_eq!(first.log_upper, first.trend);
        assert_eq!(first.log_lower, first.trend);
        assert!((env.c.to_f64() + 1.1303307).abs() < 1e-7);
        let with_main = envelope_data(5, &al, &asq, true, TrendConstant::Half, 128).unwrap();
        let d = (&with_main.rows[3].trend - &env.rows[3].trend).to_f64();
        assert!((d - 2.0 * 4f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn validation() {
        let (al, asq) = defaults(128);
        assert!(envelope_data(1, &al, &asq, false, TrendConstant::Half, 128).is_err());
        assert!(envelope_data(5, &BigReal::zero(128), &asq, false, TrendConstant::Half, 128).is_err());
    }
}
