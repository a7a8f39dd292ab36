//! The growth table of `lambda_tiny(n)` and the bound families tested on it.

use std::fmt;

use super::reference::{ReferenceDataset, RowSource};
use crate::error::{Error, Result};
use crate::kernel::{euler_gamma, BigReal};
use crate::li::{tiny_coefficients_with, StieltjesConfig};

/// Largest `n` the conjecture table is computed for.
pub const TABLE_CAP: usize = 128;

/// `f(1)` in the linear bound `|lambda_tiny(n)| <= 0.58158 n`.
pub const LINEAR_BOUND_SLOPE: &str = "0.58158";

#[derive(Debug, Clone)]
pub struct ConjectureRow {
    pub n: usize,
    /// `lambda_tiny(n) / (n gamma)`.
    pub ratio: BigReal,
    pub tiny: BigReal,
    /// `2 log n`; absent at `n = 1`.
    pub two_log_n: Option<BigReal>,
}

pub fn conjecture_table(n_max: usize, prec: u32, config: &StieltjesConfig) -> Result<Vec<ConjectureRow>> {
    if n_max > TABLE_CAP {
        return Err(Error::InvalidArgument(format!(
            "the conjecture table is capped at n = {TABLE_CAP}; larger n are only available \
             as reference rows (use the bounds command with the reference source)"
        )));
    }
    if n_max == 0 {
        return Ok(Vec::new());
    }
    let tiny = tiny_coefficients_with(n_max, prec, config)?.values;
    let gamma = euler_gamma(prec)?;
    Ok(tiny
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            let n = i + 1;
            let ratio = &(&t / &gamma) / n as i64;
            let two_log_n = (n > 1).then(|| BigReal::from_u64(n as u64, prec).ln() * 2);
            ConjectureRow {
                n,
                ratio,
                tiny: t,
                two_log_n,
            }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundFamily {
    /// `0.58158 n`.
    Linear,
    /// `gamma n`.
    EulerGamma,
    /// `a log n`.
    Log(String),
}

impl fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundFamily::Linear => write!(f, "{LINEAR_BOUND_SLOPE}*n"),
            BoundFamily::EulerGamma => f.write_str("gamma*n"),
            BoundFamily::Log(a) => write!(f, "{a}*log(n)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BoundVerdict {
    pub family: BoundFamily,
    pub bound: BigReal,
    /// `bound - |tiny|`; `None` where the bound does not apply (`a log n` at `n = 1`).
    pub margin: Option<BigReal>,
    pub holds: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct BoundRow {
    pub n: u64,
    pub tiny: BigReal,
    pub source: Option<RowSource>,
    pub verdicts: Vec<BoundVerdict>,
}

#[derive(Debug, Clone)]
pub struct BoundReport {
    pub families: Vec<BoundFamily>,
    pub rows: Vec<BoundRow>,
    pub notes: Vec<String>,
}

impl BoundReport {
    /// All applicable verdicts of `family` hold.
    pub fn all_hold(&self, family: &BoundFamily) -> bool {
        self.verdicts(family).all(|(_, v)| v.holds != Some(false))
    }

    /// Row with the smallest margin under `family`.
    pub fn tightest(&self, family: &BoundFamily) -> Option<(&BoundRow, &BigReal)> {
        self.verdicts(family)
            .filter_map(|(row, v)| v.margin.as_ref().map(|m| (row, m)))
            .fold(None, |best: Option<(&BoundRow, &BigReal)>, cur| match best {
                Some(b) if b.1 <= cur.1 => Some(b),
                _ => Some(cur),
            })
    }

    fn verdicts(&self, family: &BoundFamily) -> impl Iterator<Item = (&BoundRow, &BoundVerdict)> {
        let family = family.clone();
        self.rows
            .iter()
            .filter_map(move |row| row.verdicts.iter().find(|v| v.family == family).map(|v| (row, v)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    /// `lambda_tiny(n)` computed for `n = 1 ..= n_max`.
    Computed { n_max: usize },
    /// The embedded reference rows.
    Reference,
}

/// Margins below this many bits under the working precision count as
/// equality; this is how `|lambda_tiny(1)| = gamma` passes `<= gamma n`.
const EQUALITY_SLACK_BITS: i32 = 32;

pub fn check_bounds(source: BoundSource, a_values: &[String], prec: u32, config: &StieltjesConfig) -> Result<BoundReport> {
    let mut families = vec![BoundFamily::Linear, BoundFamily::EulerGamma];
    let mut slopes = Vec::new();
    for a in a_values {
        let value = BigReal::parse(a, prec)
            .map_err(|_| Error::InvalidArgument(format!("bound slope {a:?} is not a decimal")))?;
        families.push(BoundFamily::Log(a.trim().to_string()));
        slopes.push(value);
    }

    let samples: Vec<(u64, BigReal, Option<RowSource>)> = match source {
        BoundSource::Computed { n_max } => conjecture_table(n_max, prec, config)?
            .into_iter()
            .map(|r| (r.n as u64, r.tiny, None))
            .collect(),
        BoundSource::Reference => ReferenceDataset::embedded()
            .rows
            .iter()
            .map(|r| (r.n, r.tiny_value(prec), Some(r.source)))
            .collect(),
    };

    let gamma = euler_gamma(prec)?;
    let linear = BigReal::parse(LINEAR_BOUND_SLOPE, prec)?;
    let snap = -(prec as i32 - EQUALITY_SLACK_BITS);
    let rows = samples
        .into_iter()
        .map(|(n, tiny, src)| {
            let magnitude = tiny.abs();
            let log_n = BigReal::from_u64(n, prec).ln();
            let mut verdicts = Vec::with_capacity(families.len());
            let mut judge = |family: BoundFamily, bound: BigReal, applies: bool| {
                let (margin, holds) = if applies {
                    let mut m = &bound - &magnitude;
                    if m.abs_below_pow2(snap) {
                        m = BigReal::zero(prec);
                    }
                    let ok = !m.is_negative();
                    (Some(m), Some(ok))
                } else {
                    (None, None)
                };
                verdicts.push(BoundVerdict {
                    family,
                    bound,
                    margin,
                    holds,
                });
            };
            judge(BoundFamily::Linear, &linear * n as i64, true);
            judge(BoundFamily::EulerGamma, &gamma * n as i64, true);
            for (family, a) in families[2..].iter().zip(&slopes) {
                judge(family.clone(), a * &log_n, n > 1);
            }
            BoundRow {
                n,
                tiny,
                source: src,
                verdicts,
            }
        })
        .collect();

    let mut notes = Vec::new();
    if source == BoundSource::Reference {
        notes.push(
            "no data near n = 80000 is embedded; the reported need for a >= 5 there is not checked".into(),
        );
    }
    notes.push("a*log(n) bounds do not apply at n = 1, where log n = 0".into());
    Ok(BoundReport { families, rows, notes })
}
