use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::real::BigReal;

/// Complex number over [`BigReal`] components of a common precision.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        let prec = re.prec().max(im.prec());
        BigComplex {
            re: re.with_prec(prec),
            im: im.with_prec(prec),
        }
    }

    pub fn from_real(re: BigReal) -> Self {
        let prec = re.prec();
        BigComplex {
            re,
            im: BigReal::zero(prec),
        }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        BigComplex::new(BigReal::from_f64(re, prec), BigReal::from_f64(im, prec))
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex::from_real(BigReal::zero(prec))
    }

    pub fn one(prec: u32) -> Self {
        BigComplex::from_real(BigReal::one(prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        BigComplex {
            re: self.re.with_prec(prec),
            im: self.im.with_prec(prec),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm_sqr(&self) -> BigReal {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> BigReal {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, k: &BigReal) -> Self {
        BigComplex {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        BigComplex {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn div_i64(&self, k: i64) -> Self {
        BigComplex {
            re: &self.re / k,
            im: &self.im / k,
        }
    }

    pub fn add_real(&self, k: &BigReal) -> Self {
        BigComplex {
            re: &self.re + k,
            im: self.im.clone(),
        }
    }

    pub fn add_i64(&self, k: i64) -> Self {
        BigComplex {
            re: &self.re + k,
            im: self.im.clone(),
        }
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        BigComplex {
            re: &self.re / &d,
            im: -(&self.im / &d),
        }
    }

    /// `e^(re) * (cos im + i sin im)`.
    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        if self.im.is_zero() {
            return BigComplex::from_real(m);
        }
        let (s, c) = self.im.sin_cos();
        BigComplex {
            re: &m * &c,
            im: &m * &s,
        }
    }

    /// `x^(-self)` for a positive real `ln_x = ln x`.
    pub fn neg_pow_of(&self, ln_x: &BigReal) -> Self {
        let m = (-(&self.re * ln_x)).exp();
        if self.im.is_zero() {
            return BigComplex::from_real(m);
        }
        let (s, c) = (&self.im * ln_x).sin_cos();
        BigComplex {
            re: &m * &c,
            im: -(&m * &s),
        }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let arg = BigReal::from_float(self.im.as_float().clone().atan2(self.re.as_float()));
        BigComplex {
            re: self.norm_sqr().ln() / 2,
            im: arg,
        }
    }

    /// Integer power by binary exponentiation.
    pub fn powu(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = BigComplex::one(self.prec());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + i {:?})", self.re, self.im)
    }
}

impl Add<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        let d = rhs.norm_sqr();
        BigComplex {
            re: (&self.re * &rhs.re + &self.im * &rhs.im) / &d,
            im: (&self.im * &rhs.re - &self.re * &rhs.im) / &d,
        }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: BigComplex) -> BigComplex {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: &BigComplex) -> BigComplex {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);
