//! Li-Keiper coefficients of the Riemann xi function at arbitrary precision.
//!
//! `lambda_n` is `n` times the coefficient of `z^n` in `log xi(1/(1-z)) - log(1/2)`.
//! It splits into a smooth trend, coming from the `s`, `pi^(-s/2)` and
//! `Gamma(s/2)` factors, and a small oscillating ("tiny") part coming from
//! `log((s-1) zeta(s))`.

pub mod error;
pub mod experiments;
pub mod format;
pub mod kernel;
pub mod li;
pub mod series;
pub mod zeros;

pub use error::{Error, Result};
