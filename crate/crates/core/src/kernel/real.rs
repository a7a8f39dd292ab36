use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Smallest working precision any value is allowed to carry.
pub const MIN_PREC: u32 = 64;

fn clamp(prec: u32) -> u32 {
    prec.max(MIN_PREC)
}

/// Arbitrary-precision real number with an explicit precision in bits.
///
/// Binary operations round their result to the larger precision of the two
/// operands.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigReal(Float);

impl BigReal {
    pub fn zero(prec: u32) -> Self {
        BigReal(Float::new(clamp(prec)))
    }

    pub fn one(prec: u32) -> Self {
        BigReal(Float::with_val(clamp(prec), 1))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        BigReal(Float::with_val(clamp(prec), v))
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        BigReal(Float::with_val(clamp(prec), v))
    }

    /// Exact conversion of the binary value of `v`, rounded to `prec`.
    pub fn from_f64(v: f64, prec: u32) -> Self {
        BigReal(Float::with_val(clamp(prec), v))
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        BigReal(Float::with_val(clamp(prec), q))
    }

    pub fn from_integer(z: &Integer, prec: u32) -> Self {
        BigReal(Float::with_val(clamp(prec), z))
    }

    /// Parses a decimal literal such as `"14.134725142"` or `"-1.5e-3"`.
    pub fn parse(text: &str, prec: u32) -> Result<Self> {
        let parsed = Float::parse(text.trim())
            .map_err(|e| Error::InvalidArgument(format!("not a decimal number {text:?}: {e}")))?;
        Ok(BigReal(Float::with_val(clamp(prec), parsed)))
    }

    pub fn from_float(f: Float) -> Self {
        if f.prec() < MIN_PREC {
            BigReal(Float::with_val(MIN_PREC, f))
        } else {
            BigReal(f)
        }
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Copy rounded (or widened) to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Self {
        BigReal(Float::with_val(clamp(prec), &self.0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.0.is_zero() && self.0.is_sign_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.0.is_zero() && self.0.is_sign_positive()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn abs(&self) -> Self {
        BigReal(self.0.clone().abs())
    }

    pub fn recip(&self) -> Self {
        BigReal(self.0.clone().recip())
    }

    pub fn sqrt(&self) -> Self {
        BigReal(self.0.clone().sqrt())
    }

    pub fn ln(&self) -> Self {
        BigReal(self.0.clone().ln())
    }

    pub fn exp(&self) -> Self {
        BigReal(self.0.clone().exp())
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.prec()));
        (BigReal(s), BigReal(c))
    }

    pub fn powi(&self, exp: i32) -> Self {
        BigReal(Float::with_val(self.prec(), (&self.0).pow(exp)))
    }

    /// `2^exp` exactly.
    pub fn pow2(exp: i32, prec: u32) -> Self {
        BigReal(Float::with_val(clamp(prec), Float::i_exp(1, exp)))
    }

    /// Binary exponent `e` with `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        self.0.get_exp()
    }

    /// `true` when `|self| < 2^exp` (zero included).
    pub fn abs_below_pow2(&self, exp: i32) -> bool {
        match self.0.get_exp() {
            None => true,
            Some(e) => e <= exp,
        }
    }

    pub fn max_abs<'a, I: IntoIterator<Item = &'a BigReal>>(values: I, prec: u32) -> BigReal {
        values
            .into_iter()
            .map(BigReal::abs)
            .fold(BigReal::zero(prec), |m, v| if v > m { v } else { m })
    }

    /// Sum in iteration order at precision `prec`.
    pub fn sum<'a, I: IntoIterator<Item = &'a BigReal>>(values: I, prec: u32) -> BigReal {
        let mut acc = Float::new(clamp(prec));
        for v in values {
            acc += &v.0;
        }
        BigReal(acc)
    }

    /// Rounds `self * 10^digits` to the nearest integer, ties to even.
    pub fn scaled_round_even(&self, digits: u32) -> Integer {
        let guard = self.prec() + 4 * digits + 16;
        let scale = Integer::from(Integer::u_pow_u(10, digits));
        let scaled = Float::with_val(guard, &self.0 * &scale);
        scaled
            .round_even()
            .to_integer()
            .expect("finite value required for decimal formatting")
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({}, {} bits)", self.0.to_string_radix(10, Some(30)), self.prec())
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Enough decimal digits to represent the binary precision.
        let digits = (self.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize;
        write!(f, "{}", self.0.to_string_radix(10, Some(digits)))
    }
}

impl PartialEq<f64> for BigReal {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for BigReal {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident, $op:tt) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let prec = self.prec().max(rhs.prec());
                BigReal(Float::with_val(prec, &self.0 $op &rhs.0))
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }
        impl $trait<i64> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: i64) -> BigReal {
                BigReal(Float::with_val(self.prec(), &self.0 $op rhs))
            }
        }
        impl $trait<i64> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: i64) -> BigReal {
                (&self).$method(rhs)
            }
        }
        impl $assign_trait<&BigReal> for BigReal {
            fn $assign(&mut self, rhs: &BigReal) {
                if rhs.prec() > self.prec() {
                    self.0.set_prec(rhs.prec());
                }
                self.0 = Float::with_val(self.prec(), &self.0 $op &rhs.0);
            }
        }
        impl $assign_trait<BigReal> for BigReal {
            fn $assign(&mut self, rhs: BigReal) {
                self.$assign(&rhs);
            }
        }
        impl $assign_trait<i64> for BigReal {
            fn $assign(&mut self, rhs: i64) {
                self.0 = Float::with_val(self.prec(), &self.0 $op rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, +);
binop!(Sub, sub, SubAssign, sub_assign, -);
binop!(Mul, mul, MulAssign, mul_assign, *);
binop!(Div, div, DivAssign, div_assign, /);

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0.clone())
    }
}
