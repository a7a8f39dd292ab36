//! Partial sums of `sum lambda_n z^n / n = log xi(1/(1-z)) + log 2` and the
//! one-parameter fit of the tail beyond `n = 15` at `z = 1/2`, where the
//! closed form is `log(pi/3)`.

use std::fmt;
use std::str::FromStr;

use super::asymptotic::log_xi;
use crate::error::{Error, Result};
use crate::kernel::{constants, BigReal};
use crate::li::{li_coefficients_with, LiTable, StieltjesConfig};

/// `sum_{n=1}^{n_max} lambda_n z^n / n` over a precomputed table.
pub fn identity_sum_from(table: &LiTable, z: &BigReal, n_max: usize) -> Result<BigReal> {
    check_z(z)?;
    if n_max > table.rows.len() {
        return Err(Error::InvalidArgument(format!(
            "table holds {} coefficients, {n_max} requested",
            table.rows.len()
        )));
    }
    let prec = table.prec_bits.max(z.prec());
    let mut acc = BigReal::zero(prec);
    let mut power = BigReal::one(prec);
    for row in &table.rows[..n_max] {
        power *= z;
        acc += &(&(&row.lambda * &power) / row.n as i64);
    }
    Ok(acc)
}

pub fn identity_sum(z: &BigReal, n_max: usize, prec: u32, config: &StieltjesConfig) -> Result<BigReal> {
    check_z(z)?;
    if z.is_zero() || n_max == 0 {
        return Ok(BigReal::zero(prec));
    }
    let table = li_coefficients_with(n_max, prec, config)?;
    identity_sum_from(&table, z, n_max)
}

/// `log xi(1/(1-z)) + log 2`, the value the partial sums converge to.
pub fn identity_limit(z: &BigReal, prec: u32) -> Result<BigReal> {
    check_z(z)?;
    let one = BigReal::one(prec);
    let s = &one / &(&one - z);
    Ok(log_xi(&s, prec)? + &constants(prec)?.log2)
}

/// `log(pi/3)`.
pub fn log_pi_over_3(prec: u32) -> Result<BigReal> {
    Ok((&constants(prec)?.pi / 3).ln())
}

fn check_z(z: &BigReal) -> Result<()> {
    if !(z.abs() < 1.0) {
        return Err(Error::InvalidArgument(format!("|z| must be below 1, got {}", z.to_f64())));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailModel {
    /// `a log n`.
    Log,
    /// `a sqrt(n) log n`.
    SqrtLog,
}

impl FromStr for TailModel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "log" => Ok(TailModel::Log),
            "sqrtlog" => Ok(TailModel::SqrtLog),
            other => Err(Error::InvalidArgument(format!("unknown tail model {other:?}"))),
        }
    }
}

impl fmt::Display for TailModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TailModel::Log => "LOG",
            TailModel::SqrtLog => "SQRTLOG",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantsSource {
    /// The printed partial sum and tail constants.
    Paper,
    /// Partial sum from computed coefficients, tails by direct summation.
    Recomputed,
}

impl FromStr for ConstantsSource {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "paper" => Ok(ConstantsSource::Paper),
            "recomputed" => Ok(ConstantsSource::Recomputed),
            other => Err(Error::InvalidArgument(format!("unknown constants source {other:?}"))),
        }
    }
}

impl fmt::Display for ConstantsSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstantsSource::Paper => "PAPER",
            ConstantsSource::Recomputed => "RECOMPUTED",
        })
    }
}

/// Linear coefficient `c` of the trend `(n/2) log n + c n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TrendConstant {
    /// `(gamma - log 2 pi - 1) / 2`.
    #[default]
    Half,
    /// `gamma - log 2 pi - 1`.
    Full,
}

impl TrendConstant {
    pub fn value(self, prec: u32) -> Result<BigReal> {
        let c = constants(prec)?;
        let full = &(&c.gamma - &c.log2pi) - 1;
        Ok(match self {
            TrendConstant::Half => full / 2,
            TrendConstant::Full => full,
        })
    }
}

/// Printed inputs of the fit.
pub mod printed {
    pub const PARTIAL_SUM: &str = "0.04610606601";
    pub const TAIL_MAIN: &str = "0.0007357866258";
    pub const TAIL_LINEAR: &str = "-0.0005864142430";
    pub const TAIL_LOG: &str = "0.0008636699215";
    pub const TAIL_SQRTLOG: &str = "0.0003562045074";
    pub const A_LOG: &str = "-1.59599";
    pub const A_SQRTLOG: &str = "-0.3869721386";
}

/// Coefficients `1 ..= FIT_SPLIT` form the partial sum; the tail starts after.
pub const FIT_SPLIT: usize = 15;

/// Tail summation stops once a term drops below `10^-30`.
const TAIL_CUTOFF_EXP10: i32 = -30;

#[derive(Debug, Clone)]
pub struct TailFitResult {
    pub model: TailModel,
    pub constants_source: ConstantsSource,
    pub trend_constant: TrendConstant,
    pub partial_sum: BigReal,
    pub tail_trend: BigReal,
    pub tail_model: BigReal,
    pub target: BigReal,
    pub a: BigReal,
    /// `partial + tail_trend + a tail_model - target`.
    pub residual: BigReal,
    pub printed_a: &'static str,
    /// `a` differs from the printed value beyond its last printed digit.
    pub discrepancy: bool,
    /// Last `n` included in recomputed tails (0 for printed constants).
    pub tail_last_n: usize,
}

pub fn tail_fit(
    model: TailModel,
    source: ConstantsSource,
    trend_constant: TrendConstant,
    prec: u32,
    config: &StieltjesConfig,
) -> Result<TailFitResult> {
    let target = log_pi_over_3(prec)?;
    let parse = |s: &str| BigReal::parse(s, prec);
    let (partial_sum, tail_trend, tail_model, tail_last_n) = match source {
        ConstantsSource::Paper => {
            let tail_model = parse(match model {
                TailModel::Log => printed::TAIL_LOG,
                TailModel::SqrtLog => printed::TAIL_SQRTLOG,
            })?;
            let tail_trend = parse(printed::TAIL_MAIN)? + parse(printed::TAIL_LINEAR)?;
            (parse(printed::PARTIAL_SUM)?, tail_trend, tail_model, 0)
        }
        ConstantsSource::Recomputed => {
            let half = BigReal::pow2(-1, prec);
            let partial = identity_sum(&half, FIT_SPLIT, prec, config)?;
            let tails = recomputed_tails(model, trend_constant, prec)?;
            (partial, tails.0, tails.1, tails.2)
        }
    };
    let a = &(&(&target - &partial_sum) - &tail_trend) / &tail_model;
    let residual = &(&(&partial_sum + &tail_trend) + &(&a * &tail_model)) - &target;

    let printed_a = match model {
        TailModel::Log => printed::A_LOG,
        TailModel::SqrtLog => printed::A_SQRTLOG,
    };
    let decimals = printed_a.split_once('.').map_or(0, |(_, f)| f.len()) as i32;
    let printed_value = parse(printed_a)?;
    // beyond half a unit in the last printed place
    let unit = BigReal::from_f64(10f64.powi(-decimals) / 2.0, prec);
    let discrepancy = (&a - &printed_value).abs() > unit;

    Ok(TailFitResult {
        model,
        constants_source: source,
        trend_constant,
        partial_sum,
        tail_trend,
        tail_model,
        target,
        a,
        residual,
        printed_a,
        discrepancy,
        tail_last_n,
    })
}

/// `sum_{n>FIT_SPLIT} f(n) 2^-n / n` for the trend `(n/2) log n + c n` and
/// the model term.
fn recomputed_tails(model: TailModel, trend_constant: TrendConstant, prec: u32) -> Result<(BigReal, BigReal, usize)> {
    let c = trend_constant.value(prec)?;
    let cutoff = BigReal::parse(&format!("1e{TAIL_CUTOFF_EXP10}"), prec)?;
    let mut trend = BigReal::zero(prec);
    let mut tail = BigReal::zero(prec);
    let mut n = FIT_SPLIT;
    loop {
        n += 1;
        let nn = BigReal::from_u64(n as u64, prec);
        let weight = &BigReal::pow2(-(n as i32), prec) / n as i64;
        let log_n = nn.ln();
        let main = &(&(&nn * &log_n) / 2) + &(&c * &nn);
        let m = match model {
            TailModel::Log => log_n,
            TailModel::SqrtLog => &nn.sqrt() * &log_n,
        };
        let trend_term = &main * &weight;
        let model_term = &m * &weight;
        trend += &trend_term;
        tail += &model_term;
        if trend_term.abs() < cutoff && model_term.abs() < cutoff {
            break;
        }
    }
    Ok((trend, tail, n))
}
