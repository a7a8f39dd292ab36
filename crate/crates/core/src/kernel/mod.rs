//! Arbitrary-precision scalars and the special functions built on them.

mod complex;
mod constants;
mod gamma;
mod real;
mod zeta;

pub use complex::BigComplex;
pub use constants::{bernoulli, constants, euler_gamma, Constants};
pub use gamma::log_gamma;
pub use real::{BigReal, MIN_PREC};
pub use zeta::{zeta_em, ZetaEvaluator, ZetaParams, MAX_TAIL_TERMS, POLE_EXCLUSION_LOG2};
