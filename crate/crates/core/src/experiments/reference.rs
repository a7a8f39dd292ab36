//! Published values of `lambda_tiny(n)` shipped as a fixture: the small-n
//! table, larger-n values from the literature, and values read off plots.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::BigReal;

static REFERENCE_V1: &str = include_str!("../../data/reference_v1.csv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowSource {
    Table,
    Maslanka,
    PlotRead,
}

impl fmt::Display for RowSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowSource::Table => "TABLE",
            RowSource::Maslanka => "MASLANKA",
            RowSource::PlotRead => "PLOT_READ",
        })
    }
}

impl FromStr for RowSource {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "TABLE" => Ok(RowSource::Table),
            "MASLANKA" => Ok(RowSource::Maslanka),
            "PLOT_READ" => Ok(RowSource::PlotRead),
            other => Err(Error::InvalidArgument(format!("unknown row source {other:?}"))),
        }
    }
}

/// One fixture row. Decimal columns keep their printed text.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceRow {
    pub n: u64,
    pub ratio: String,
    pub tiny: String,
    pub two_log_n: Option<String>,
    pub source: RowSource,
    pub note: Option<String>,
}

impl ReferenceRow {
    pub fn tiny_value(&self, prec: u32) -> BigReal {
        BigReal::parse(&self.tiny, prec).expect("fixture validated at load")
    }

    pub fn ratio_value(&self, prec: u32) -> BigReal {
        BigReal::parse(&self.ratio, prec).expect("fixture validated at load")
    }

    /// Digits after the decimal point in the printed `tiny` column.
    pub fn tiny_decimals(&self) -> u32 {
        self.tiny.split_once('.').map_or(0, |(_, f)| f.len() as u32)
    }
}

#[derive(Debug, Clone)]
pub struct ReferenceDataset {
    pub version: &'static str,
    pub rows: Vec<ReferenceRow>,
}

impl ReferenceDataset {
    pub fn embedded() -> ReferenceDataset {
        parse(REFERENCE_V1).expect("embedded reference fixture is well formed")
    }

    pub fn by_source(&self, source: RowSource) -> impl Iterator<Item = &ReferenceRow> {
        self.rows.iter().filter(move |r| r.source == source)
    }

    pub fn row(&self, n: u64, source: RowSource) -> Option<&ReferenceRow> {
        self.rows.iter().find(|r| r.n == n && r.source == source)
    }
}

fn parse(text: &str) -> Result<ReferenceDataset> {
    let mut lines = text.lines().enumerate();
    let bad = |line: usize, msg: String| Error::Parse {
        path: "reference_v1.csv".into(),
        line: line + 1,
        msg,
    };
    match lines.next() {
        Some((_, "n,ratio,tiny,two_log_n,source,note")) => {}
        _ => return Err(bad(0, "unexpected header".into())),
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 6 {
            return Err(bad(i, format!("expected 6 fields, got {}", f.len())));
        }
        let n = f[0].parse().map_err(|_| bad(i, format!("bad n {:?}", f[0])))?;
        for text in [f[1], f[2], f[3]].into_iter().filter(|t| !t.is_empty()) {
            BigReal::parse(text, 64).map_err(|_| bad(i, format!("bad decimal {text:?}")))?;
        }
        let opt = |s: &str| (!s.is_empty()).then(|| s.to_string());
        rows.push(ReferenceRow {
            n,
            ratio: f[1].into(),
            tiny: f[2].into(),
            two_log_n: opt(f[3]),
            source: f[4].parse().map_err(|e: Error| bad(i, e.to_string()))?,
            note: opt(f[5]),
        });
    }
    Ok(ReferenceDataset { version: "v1", rows })
}
