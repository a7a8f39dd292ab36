//! Fixed-digit decimal output and CSV/JSON tables.
//!
//! Numbers are rounded half-to-even at the last digit and emitted as decimal
//! strings in both formats, so output bytes depend only on the values.

use std::fmt::Write as _;

use serde_json::{Map, Value};

use crate::kernel::BigReal;

/// `x` rounded to `digits` decimals, ties to even. Values that round to zero
/// print without a sign.
pub fn fixed(x: &BigReal, digits: u32) -> String {
    let scaled = x.scaled_round_even(digits);
    let negative = scaled < 0;
    let magnitude = scaled.abs().to_string();
    let digits = digits as usize;
    let padded = if magnitude.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - magnitude.len()), magnitude)
    } else {
        magnitude
    };
    let split = padded.len() - digits;
    let mut out = String::with_capacity(padded.len() + 2);
    if negative {
        out.push('-');
    }
    out.push_str(&padded[..split]);
    if digits > 0 {
        out.push('.');
        out.push_str(&padded[split..]);
    }
    out
}

pub fn fixed_f64(x: f64, digits: u32) -> String {
    fixed(&BigReal::from_f64(x, 64), digits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Num(BigReal),
    Int(i64),
    Text(String),
    Empty,
}

impl Cell {
    fn render(&self, digits: u32) -> String {
        match self {
            Cell::Num(x) => fixed(x, digits),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

impl From<BigReal> for Cell {
    fn from(x: BigReal) -> Self {
        Cell::Num(x)
    }
}

impl From<&BigReal> for Cell {
    fn from(x: &BigReal) -> Self {
        Cell::Num(x.clone())
    }
}

impl From<Option<BigReal>> for Cell {
    fn from(x: Option<BigReal>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<i64> for Cell {
    fn from(i: i64) -> Self {
        Cell::Int(i)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<u64> for Cell {
    fn from(i: u64) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Text(b.to_string())
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Panics when the row width differs from the header.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat, digits: u32) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(digits),
            OutputFormat::Json => self.to_json(digits),
        }
    }

    pub fn to_csv(&self, digits: u32) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(|c| csv_field(&c.render(digits))).collect();
            let _ = writeln!(out, "{}", fields.join(","));
        }
        out
    }

    /// Array of records; every value is a string, empty cells are `null`.
    pub fn to_json(&self, digits: u32) -> String {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    let v = match cell {
                        Cell::Empty => Value::Null,
                        other => Value::String(other.render(digits)),
                    };
                    obj.insert(name.clone(), v);
                }
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&Value::Array(records)).expect("serializable");
        s.push('\n');
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Decimal digits that `prec` bits can carry.
pub fn max_digits(prec: u32) -> u32 {
    (prec as f64 * std::f64::consts::LOG10_2).floor() as u32
}
