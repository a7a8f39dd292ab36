//! Self-convergence of `lambda_tiny(n)` under a doubling sweep of either the
//! DFT grid or the working precision.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::BigReal;
use crate::li::{default_precision, tiny_coefficients_with, StieltjesConfig};

pub const DIAGNOSTICS_CAP: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    DftPoints,
    Precision,
}

impl FromStr for Sweep {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "dft_points" | "points" => Ok(Sweep::DftPoints),
            "precision" | "prec" => Ok(Sweep::Precision),
            other => Err(Error::InvalidArgument(format!("unknown sweep {other:?}"))),
        }
    }
}

impl fmt::Display for Sweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sweep::DftPoints => "DFT_POINTS",
            Sweep::Precision => "PRECISION",
        })
    }
}

#[derive(Debug, Clone)]
pub struct DiagnosticRow {
    /// DFT points or precision bits.
    pub parameter: u64,
    pub estimate: BigReal,
    /// Distance to the previous estimate; absent for the first row.
    pub step: Option<BigReal>,
}

/// Sweep for `lambda_tiny(n)`. The DFT sweep runs from the smallest usable
/// grid up to `16 n` points at `prec`; the precision sweep doubles from 64
/// bits up to `prec` with the default adaptive grid.
pub fn convergence_diagnostics(n: usize, sweep: Sweep, prec: u32, radius: f64) -> Result<Vec<DiagnosticRow>> {
    if n == 0 || n > DIAGNOSTICS_CAP {
        return Err(Error::InvalidArgument(format!(
            "diagnostics cover 1 <= n <= {DIAGNOSTICS_CAP}, got {n}"
        )));
    }
    let settings: Vec<(u64, u32, StieltjesConfig)> = match sweep {
        Sweep::DftPoints => {
            let mut points = (n + 2).next_power_of_two();
            let last = (16 * n).next_power_of_two();
            let mut out = Vec::new();
            while points <= last {
                out.push((
                    points as u64,
                    prec,
                    StieltjesConfig {
                        radius,
                        points: Some(points),
                    },
                ));
                points *= 2;
            }
            out
        }
        Sweep::Precision => {
            let top = prec.max(default_precision(n));
            let mut bits = 64u32;
            let mut out = Vec::new();
            loop {
                let b = bits.min(top);
                out.push((
                    b as u64,
                    b,
                    StieltjesConfig {
                        radius,
                        points: None,
                    },
                ));
                if b == top {
                    break;
                }
                bits *= 2;
            }
            out
        }
    };

    let mut rows: Vec<DiagnosticRow> = Vec::with_capacity(settings.len());
    for (parameter, bits, config) in settings {
        let estimate = tiny_coefficients_with(n, bits, &config)?.values[n - 1].clone();
        let step = rows.last().map(|prev| (&estimate - &prev.estimate).abs());
        rows.push(DiagnosticRow {
            parameter,
            estimate,
            step,
        });
    }
    Ok(rows)
}
