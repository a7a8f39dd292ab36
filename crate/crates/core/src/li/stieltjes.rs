//! Stieltjes constants from the Taylor coefficients of `h(u) = u zeta(1+u)`,
//! which is entire with
//!
//! h(u) = (s-1) zeta(s) = 1 + sum_{k>=0} (-1)^k gamma_k u^(k+1) / k!.
//!
//! The coefficients are read off a discrete Fourier transform of `h` sampled
//! on the circle `|u| = r`. The grid is doubled until the retained
//! coefficients agree between consecutive grids.

use rayon::prelude::*;
use rug::Float;

use crate::error::{Error, Result};
use crate::kernel::{BigComplex, BigReal, ZetaEvaluator};
use crate::series::{TruncatedSeries, Variable};

pub const DEFAULT_RADIUS: f64 = 0.25;

/// Grid doublings allowed beyond the initial `8 * count` points.
const MAX_DOUBLINGS: u32 = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct StieltjesConfig {
    /// Radius of the sampling circle around `u = 0`.
    pub radius: f64,
    /// Fixed number of DFT points. `None` selects `8 * count` and refines
    /// adaptively.
    pub points: Option<usize>,
}

impl Default for StieltjesConfig {
    fn default() -> Self {
        StieltjesConfig {
            radius: DEFAULT_RADIUS,
            points: None,
        }
    }
}

impl StieltjesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.radius > 0.0 && self.radius < 0.5) {
            return Err(Error::InvalidArgument(format!(
                "circle radius must lie in (0, 1/2), got {}",
                self.radius
            )));
        }
        Ok(())
    }
}

/// Bits of precision the downstream `u -> z` pullback of `count`
/// coefficients consumes when they come from a circle of radius `r`:
/// `log2(sum_m C(n-1, m-1) r^-m) = log2((1+r)/r) (n-1) + log2(1/r)`.
pub fn pullback_guard_bits(count: usize, radius: f64) -> u32 {
    let per_index = ((1.0 + radius) / radius).log2();
    (per_index * count as f64 + (1.0 / radius).log2()).ceil() as u32 + 48
}

#[derive(Debug, Clone)]
pub struct StieltjesSet {
    /// `gamma_0 .. gamma_{count-1}`.
    pub values: Vec<BigReal>,
    /// Taylor coefficients `h_0 .. h_count` of `h(u)`; `h_0 = 1`.
    pub taylor: Vec<BigReal>,
    pub circle_radius: f64,
    /// DFT grid size the values were taken from.
    pub dft_points: usize,
    /// Requested precision.
    pub prec_bits: u32,
    /// Precision the values carry.
    pub working_prec: u32,
}

impl StieltjesSet {
    /// `h(u) = (s-1) zeta(s)` as a series in `u`, order `count`.
    pub fn h_series(&self) -> TruncatedSeries {
        TruncatedSeries::new(Variable::U, self.taylor.clone())
    }
}

pub fn stieltjes(count: usize, prec: u32) -> Result<StieltjesSet> {
    stieltjes_with(count, prec, &StieltjesConfig::default())
}

pub fn stieltjes_with(count: usize, prec: u32, config: &StieltjesConfig) -> Result<StieltjesSet> {
    if count == 0 {
        return Err(Error::InvalidArgument("need at least one Stieltjes constant".into()));
    }
    config.validate()?;
    let work = prec + pullback_guard_bits(count, config.radius);
    let sampler = CircleSampler::new(config.radius, work);

    let (taylor, points) = match config.points {
        Some(points) => {
            if points < count + 2 || points % 2 == 1 {
                return Err(Error::InvalidArgument(format!(
                    "DFT needs an even number of points above {}, got {points}",
                    count + 1
                )));
            }
            let samples = sampler.sample(points)?;
            (sampler.scaled_coefficients(&samples, points, count), points)
        }
        None => adaptive(&sampler, count, work)?,
    };

    let radius = BigReal::from_f64(config.radius, work);
    let mut r_pow = BigReal::one(work);
    let mut h = Vec::with_capacity(count + 1);
    for scaled in taylor {
        h.push(&scaled / &r_pow);
        r_pow *= &radius;
    }
    // a fixed grid may alias visibly; only the adaptive grid is held to this
    let normalization = &h[0] - 1;
    if config.points.is_none() && !normalization.abs_below_pow2(-(work as i32 - 32)) {
        return Err(Error::Consistency(format!(
            "(s-1) zeta(s) at s = 1 came out as {} instead of 1",
            h[0].to_f64()
        )));
    }
    h[0] = BigReal::one(work);

    // gamma_k = (-1)^k k! h_{k+1}
    let mut factorial = BigReal::one(work);
    let mut values = Vec::with_capacity(count);
    for k in 0..count {
        if k > 0 {
            factorial *= k as i64;
        }
        let g = &h[k + 1] * &factorial;
        values.push(if k % 2 == 0 { g } else { -g });
    }

    Ok(StieltjesSet {
        values,
        taylor: h,
        circle_radius: config.radius,
        dft_points: points,
        prec_bits: prec,
        working_prec: work,
    })
}

fn adaptive(sampler: &CircleSampler, count: usize, work: u32) -> Result<(Vec<BigReal>, usize)> {
    let mut points = (8 * count).max(16);
    points += points % 2;
    let tolerance = -(work as i32 - 32);

    let mut fine_points = 2 * points;
    let mut fine = sampler.sample(fine_points)?;
    for _ in 0..=MAX_DOUBLINGS {
        let coarse: Vec<BigComplex> = fine.iter().step_by(2).cloned().collect();
        let a = sampler.scaled_coefficients(&coarse, points, count);
        let b = sampler.scaled_coefficients(&fine, fine_points, count);
        let stable = a.iter().zip(&b).all(|(x, y)| (x - y).abs_below_pow2(tolerance));
        if stable {
            return Ok((b, fine_points));
        }
        points = fine_points;
        fine_points *= 2;
        fine = sampler.refine(&fine, fine_points)?;
    }
    Err(Error::PrecisionFailure(format!(
        "Stieltjes coefficients did not stabilize with {points} DFT points"
    )))
}

struct CircleSampler {
    radius: BigReal,
    tau: BigReal,
    prec: u32,
}

impl CircleSampler {
    fn new(radius: f64, prec: u32) -> Self {
        CircleSampler {
            radius: BigReal::from_f64(radius, prec),
            tau: BigReal::from_float(Float::with_val(prec, rug::float::Constant::Pi)) * 2,
            prec,
        }
    }

    /// `h(r e^(2 pi i j / points))` for `j = 0 ..= points/2`; the lower half
    /// follows from `h(conj u) = conj h(u)`.
    fn sample(&self, points: usize) -> Result<Vec<BigComplex>> {
        (0..=points / 2)
            .into_par_iter()
            .map(|j| self.eval(j, points))
            .collect()
    }

    /// Samples for `points` given those for `points / 2`.
    fn refine(&self, coarse: &[BigComplex], points: usize) -> Result<Vec<BigComplex>> {
        let odd: Vec<BigComplex> = (0..points / 4)
            .into_par_iter()
            .map(|i| self.eval(2 * i + 1, points))
            .collect::<Result<_>>()?;
        let mut out = Vec::with_capacity(points / 2 + 1);
        for (i, c) in coarse.iter().enumerate() {
            out.push(c.clone());
            if let Some(o) = odd.get(i) {
                out.push(o.clone());
            }
        }
        Ok(out)
    }

    fn eval(&self, j: usize, points: usize) -> Result<BigComplex> {
        let u = if j == 0 {
            BigComplex::from_real(self.radius.clone())
        } else if 2 * j == points {
            BigComplex::from_real(-&self.radius)
        } else {
            let theta = &(&self.tau * j as i64) / points as i64;
            let (sin, cos) = theta.sin_cos();
            BigComplex::new(&self.radius * &cos, &self.radius * &sin)
        };
        let zeta = ZetaEvaluator::unverified(self.prec).eval(&u.add_i64(1))?;
        Ok(&u * &zeta)
    }

    /// `h_k r^k` for `k = 0 ..= count` from samples on a `points` grid.
    fn scaled_coefficients(&self, samples: &[BigComplex], points: usize, count: usize) -> Vec<BigReal> {
        let prec = self.prec;
        let twiddles: Vec<(BigReal, BigReal)> = (0..points)
            .map(|m| (&(&self.tau * m as i64) / points as i64).sin_cos())
            .collect();
        let half = points / 2;
        (0..=count)
            .into_par_iter()
            .map(|k| {
                let mut acc = Float::with_val(prec, samples[0].re.as_float());
                let last = samples[half].re.as_float();
                if k % 2 == 0 {
                    acc += last;
                } else {
                    acc -= last;
                }
                let mut inner = Float::new(prec);
                for (j, v) in samples.iter().enumerate().take(half).skip(1) {
                    let (sin, cos) = &twiddles[(j * k) % points];
                    inner += v.re.as_float() * cos.as_float();
                    inner += v.im.as_float() * sin.as_float();
                }
                acc += inner * 2u32;
                acc /= points as u64;
                BigReal::from_float(acc)
            })
            .collect()
    }
}
