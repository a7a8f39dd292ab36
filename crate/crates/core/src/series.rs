//! Truncated power series with [`BigReal`] coefficients.
//!
//! Two indeterminates appear in the Li-Keiper expansion: `z`, with
//! `s = 1/(1-z)`, and `u = s - 1 = z/(1-z)`. Each series is tagged with its
//! variable so the two are never mixed by accident.

use std::fmt;

use rayon::prelude::*;
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::kernel::BigReal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    Z,
    U,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Z => f.write_str("z"),
            Variable::U => f.write_str("u"),
        }
    }
}

/// `sum_{k=0}^{order} coeffs[k] x^k + O(x^(order+1))`.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries {
    variable: Variable,
    coeffs: Vec<BigReal>,
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries")
            .field("variable", &self.variable)
            .field("coeffs", &self.coeffs.iter().map(BigReal::to_f64).collect::<Vec<_>>())
            .finish()
    }
}

impl TruncatedSeries {
    /// Panics on an empty coefficient vector; a series has at least a constant term.
    pub fn new(variable: Variable, coeffs: Vec<BigReal>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        TruncatedSeries { variable, coeffs }
    }

    pub fn from_f64(variable: Variable, coeffs: &[f64], prec: u32) -> Self {
        TruncatedSeries::new(
            variable,
            coeffs.iter().map(|&c| BigReal::from_f64(c, prec)).collect(),
        )
    }

    pub fn zero(variable: Variable, order: usize, prec: u32) -> Self {
        TruncatedSeries::new(variable, vec![BigReal::zero(prec); order + 1])
    }

    pub fn one(variable: Variable, order: usize, prec: u32) -> Self {
        let mut s = TruncatedSeries::zero(variable, order, prec);
        s.coeffs[0] = BigReal::one(prec);
        s
    }

    /// `u(z) = z/(1-z) = z + z^2 + ...`, the change of variable from `u` to `z`.
    pub fn u_of_z(order: usize, prec: u32) -> Self {
        let mut coeffs = vec![BigReal::one(prec); order + 1];
        coeffs[0] = BigReal::zero(prec);
        TruncatedSeries::new(Variable::Z, coeffs)
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigReal] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigReal> {
        self.coeffs
    }

    /// Coefficient of `x^k`, `None` beyond the order.
    pub fn coeff(&self, k: usize) -> Option<&BigReal> {
        self.coeffs.get(k)
    }

    pub fn prec(&self) -> u32 {
        self.coeffs.iter().map(BigReal::prec).max().unwrap_or(0)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coeffs.len());
        TruncatedSeries::new(self.variable, self.coeffs[..keep].to_vec())
    }

    fn check_same_variable(&self, other: &Self) -> Result<()> {
        if self.variable != other.variable {
            return Err(Error::InvalidArgument(format!(
                "series in {} combined with series in {}",
                self.variable, other.variable
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_variable(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Ok(TruncatedSeries::new(self.variable, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_variable(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        Ok(TruncatedSeries::new(self.variable, coeffs))
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_variable(other)?;
        Ok(self.mul_unchecked(other, self.order().min(other.order())))
    }

    fn mul_unchecked(&self, other: &Self, order: usize) -> Self {
        let prec = self.prec().max(other.prec());
        let coeffs = (0..=order)
            .map(|k| {
                let mut acc = Float::new(prec);
                for j in 0..=k {
                    let (Some(a), Some(b)) = (self.coeffs.get(j), other.coeffs.get(k - j)) else {
                        continue;
                    };
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc += a.as_float() * b.as_float();
                }
                BigReal::from_float(acc)
            })
            .collect();
        TruncatedSeries::new(self.variable, coeffs)
    }

    pub fn scale(&self, k: &BigReal) -> Self {
        TruncatedSeries::new(self.variable, self.coeffs.iter().map(|c| c * k).collect())
    }

    fn constant_is(&self, value: i64) -> bool {
        let c = &self.coeffs[0];
        (c - value).abs_below_pow2(-(c.prec() as i32 - 8))
    }

    /// `log(a)` from `(log a)' = a'/a`; requires `a(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_is(1) {
            return Err(Error::InvalidArgument(format!(
                "series log needs constant term 1, got {}",
                self.coeffs[0].to_f64()
            )));
        }
        let prec = self.prec();
        let n = self.order();
        let mut b: Vec<BigReal> = Vec::with_capacity(n + 1);
        b.push(BigReal::zero(prec));
        // k b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j}
        for k in 1..=n {
            let mut acc = Float::with_val(prec, self.coeffs[k].as_float() * k as u64);
            for j in 1..k {
                let t = Float::with_val(prec, b[j].as_float() * self.coeffs[k - j].as_float());
                acc -= t * j as u64;
            }
            acc /= k as u64;
            b.push(BigReal::from_float(acc));
        }
        Ok(TruncatedSeries::new(self.variable, b))
    }

    /// `exp(a)`; requires `a(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_is(0) {
            return Err(Error::InvalidArgument(format!(
                "series exp needs constant term 0, got {}",
                self.coeffs[0].to_f64()
            )));
        }
        let prec = self.prec();
        let n = self.order();
        let mut e: Vec<BigReal> = Vec::with_capacity(n + 1);
        e.push(BigReal::one(prec));
        // k e_k = sum_{j=1}^{k} j a_j e_{k-j}
        for k in 1..=n {
            let mut acc = Float::new(prec);
            for j in 1..=k {
                let t = Float::with_val(prec, self.coeffs[j].as_float() * e[k - j].as_float());
                acc += t * j as u64;
            }
            acc /= k as u64;
            e.push(BigReal::from_float(acc));
        }
        Ok(TruncatedSeries::new(self.variable, e))
    }

    /// `outer(inner(x))` by Horner's rule over series. The result is in the
    /// variable of `inner`, at the order of `inner`.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        if !inner.constant_is(0) {
            return Err(Error::InvalidArgument(format!(
                "composition needs an inner series with zero constant term, got {}",
                inner.coeffs[0].to_f64()
            )));
        }
        let order = inner.order();
        let prec = outer.prec().max(inner.prec());
        let top = outer.order().min(order);
        let mut acc = TruncatedSeries::zero(inner.variable, order, prec);
        acc.coeffs[0] = outer.coeffs[top].with_prec(prec);
        for m in (0..top).rev() {
            acc = acc.mul_unchecked(inner, order);
            acc.coeffs[0] += &outer.coeffs[m];
        }
        Ok(acc)
    }

    /// Pulls a `u`-series back to `z` through `u = z/(1-z)`.
    ///
    /// Since `u^m = sum_{n>=m} C(n-1, m-1) z^n`,
    /// `b_n = sum_{m=1}^{min(n, M)} C(n-1, m-1) a_m`. Binomials are exact
    /// integers; each product is rounded once. Coefficient `n` is accumulated
    /// at `max(prec, 2n + 64)` bits to absorb the alternating cancellation.
    pub fn binomial_pullback(a: &Self, order: usize) -> Result<Self> {
        if a.variable != Variable::U {
            return Err(Error::InvalidArgument(
                "binomial pullback expects a series in u".into(),
            ));
        }
        if !a.constant_is(0) {
            return Err(Error::InvalidArgument(format!(
                "binomial pullback needs zero constant term, got {}",
                a.coeffs[0].to_f64()
            )));
        }
        let base = a.prec();
        let coeffs: Vec<BigReal> = (0..=order)
            .into_par_iter()
            .map(|n| {
                let prec = base.max(2 * n as u32 + 64);
                if n == 0 {
                    return BigReal::zero(prec);
                }
                let top = n.min(a.order());
                let mut acc = Float::new(prec);
                let mut binom = Integer::from(1); // C(n-1, 0)
                for m in 1..=top {
                    if !a.coeffs[m].is_zero() {
                        acc += Float::with_val(prec, a.coeffs[m].as_float() * &binom);
                    }
                    // C(n-1, m) = C(n-1, m-1) (n-m) / m
                    binom *= (n - m) as u64;
                    binom /= m as u64;
                }
                BigReal::from_float(acc)
            })
            .collect();
        Ok(TruncatedSeries::new(Variable::Z, coeffs))
    }
}
