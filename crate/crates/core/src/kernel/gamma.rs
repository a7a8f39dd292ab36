use rug::Float;

use super::constants::{bernoulli_over_factorial, constants};
use super::real::BigReal;
use crate::error::{Error, Result};

/// `ln Gamma(x)` for real `x > 0`, at the precision of `x`.
///
/// The argument is raised with `Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1))`
/// until the Stirling series reaches the target accuracy, then
/// `ln Gamma(y) = (y - 1/2) ln y - y + ln(2 pi)/2 + sum_j B_2j / (2j (2j-1) y^(2j-1))`.
pub fn log_gamma(x: &BigReal) -> Result<BigReal> {
    if !x.is_positive() {
        return Err(Error::Domain(format!(
            "log_gamma requires x > 0, got {}",
            x.to_f64()
        )));
    }
    let prec = x.prec();
    let work = prec + 32;
    let target = -(prec as i32 + 16);

    // The smallest Stirling term is ~ exp(-2 pi y); 2 pi y log2(e) ~ 9.06 y bits.
    let y_min = ((prec + 24) as f64 / 9.0).ceil().max(8.0);
    let mut y = x.with_prec(work);
    let mut shift = BigReal::one(work);
    let mut shifted = false;
    while y.to_f64() < y_min {
        shift *= &y;
        y += 1;
        shifted = true;
    }

    let c = constants(work)?;
    let mut acc = &(&y - &BigReal::from_f64(0.5, work)) * &y.ln() - &y + &c.log2pi / 2;
    let y_inv = y.recip();
    let y_inv_sq = &y_inv * &y_inv;
    let mut y_pow = y_inv.clone();
    for j in 1..=1000u32 {
        // B_2j / (2j (2j-1)) = (B_2j / (2j)!) (2j-2)!
        let coeff = bernoulli_over_factorial(j, work)
            * BigReal::from_float(Float::with_val(work, Float::factorial(2 * j - 2)));
        let term = &coeff * &y_pow;
        if term.abs_below_pow2(target) {
            break;
        }
        acc += &term;
        y_pow *= &y_inv_sq;
    }
    if shifted {
        acc -= shift.ln();
    }
    Ok(acc.with_prec(prec))
}
