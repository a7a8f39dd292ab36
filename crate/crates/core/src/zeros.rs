//! Li coefficients from the nontrivial zeros:
//! `lambda_n = sum_rho [1 - (1 - 1/rho)^n]`, summed over conjugate pairs
//! `rho = 1/2 +- i t` taken from a table of ordinates.

use std::fs;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::{constants, BigComplex, BigReal};

/// Precision ordinates are parsed at.
pub const PARSE_PREC: u32 = 256;

/// Ordinates summed sequentially per parallel chunk.
const CHUNK: usize = 256;

static SAMPLE: &str = include_str!("../data/zeros_first100.txt");

#[derive(Debug, Clone)]
pub struct ZeroTable {
    /// Positive imaginary parts, strictly increasing.
    pub ordinates: Vec<BigReal>,
    pub source_path: String,
}

impl ZeroTable {
    pub fn count(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// First `limit` ordinates.
    pub fn truncated(&self, limit: usize) -> ZeroTable {
        ZeroTable {
            ordinates: self.ordinates.iter().take(limit).cloned().collect(),
            source_path: self.source_path.clone(),
        }
    }
}

/// The first 100 ordinates to 9 decimals, shipped with the crate.
pub fn sample_zeros(limit: Option<usize>) -> Result<ZeroTable> {
    parse_zeros(SAMPLE, "<built-in sample>", limit)
}

pub fn load_zeros(path: impl AsRef<Path>, limit: Option<usize>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_zeros(&text, &path.display().to_string(), limit).map_err(|e| match e {
        Error::Parse { line, msg, .. } => Error::Parse {
            path: path.to_path_buf(),
            line,
            msg,
        },
        other => other,
    })
}

/// One decimal ordinate per line; blank lines and lines starting with `#`
/// are skipped.
pub fn parse_zeros(text: &str, source: &str, limit: Option<usize>) -> Result<ZeroTable> {
    let mut ordinates: Vec<BigReal> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        if limit.is_some_and(|l| ordinates.len() >= l) {
            break;
        }
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let value = BigReal::parse(line, PARSE_PREC).map_err(|_| Error::Parse {
            path: source.into(),
            line: index + 1,
            msg: format!("not a decimal ordinate: {line:?}"),
        })?;
        if let Some(prev) = ordinates.last() {
            if value <= *prev {
                return Err(Error::Validation(format!(
                    "{source}: ordinates not strictly increasing at line {}",
                    index + 1
                )));
            }
        } else if !(value > 14.0 && value < 15.0) {
            return Err(Error::Validation(format!(
                "{source}: first ordinate {} is not the first zero (expected about 14.1347)",
                value.to_f64()
            )));
        }
        ordinates.push(value);
    }
    Ok(ZeroTable {
        ordinates,
        source_path: source.into(),
    })
}

#[derive(Debug, Clone)]
pub struct ZeroEstimate {
    /// Truncated sum over the table.
    pub estimate: BigReal,
    /// Heuristic size of the omitted zeros' contribution; reported, never added.
    pub tail_bound: BigReal,
    /// Largest imaginary part left after conjugate pairs were combined.
    pub max_pair_imag: BigReal,
}

/// Truncated zero sum for `lambda_n` at `prec` bits.
///
/// Each pair contributes `2 Re[1 - (1 - 1/rho)^n] = 4 sin^2(n theta / 2) <=
/// n^2 / (1/4 + t^2)`, so the omitted part is bounded by `n^2` times the
/// zero density `log(t / 2 pi) / (2 pi)` integrated against `1/t^2` beyond
/// the largest ordinate `T`: `n^2 (1 + log(T / 2 pi)) / (2 pi T)`.
pub fn lambda_from_zeros(n: i64, zeros: &ZeroTable, prec: u32) -> Result<ZeroEstimate> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("n must be non-negative, got {n}")));
    }
    if n == 0 {
        return Ok(ZeroEstimate {
            estimate: BigReal::zero(prec),
            tail_bound: BigReal::zero(prec),
            max_pair_imag: BigReal::zero(prec),
        });
    }
    if zeros.is_empty() {
        return Err(Error::InvalidArgument("zero table is empty".into()));
    }
    let n = n as u64;
    let partials: Vec<(BigReal, BigReal)> = zeros
        .ordinates
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut sum = BigReal::zero(prec);
            let mut imag = BigReal::zero(prec);
            for t in chunk {
                let pair = pair_term(t, n, prec);
                sum += &pair.re;
                let im = pair.im.abs();
                if im > imag {
                    imag = im;
                }
            }
            (sum, imag)
        })
        .collect();
    let mut estimate = BigReal::zero(prec);
    let mut max_pair_imag = BigReal::zero(prec);
    for (s, im) in partials {
        estimate += &s;
        if im > max_pair_imag {
            max_pair_imag = im;
        }
    }

    let c = constants(prec)?;
    let big_t = zeros.ordinates.last().expect("non-empty").with_prec(prec);
    let two_pi = &c.pi * 2;
    let density = (&big_t / &two_pi).ln() + 1;
    let tail_bound = &(&density * (n * n) as i64) / &(&two_pi * &big_t);
    Ok(ZeroEstimate {
        estimate,
        tail_bound,
        max_pair_imag,
    })
}

/// `[1 - (1 - 1/rho)^n] + [1 - (1 - 1/conj rho)^n]` for `rho = 1/2 + i t`.
fn pair_term(t: &BigReal, n: u64, prec: u32) -> BigComplex {
    let rho = BigComplex::new(BigReal::from_f64(0.5, prec), t.with_prec(prec));
    let one = BigComplex::one(prec);
    let q = &one - &rho.recip();
    let upper = &one - &q.powu(n);
    let lower = &one - &q.conj().powu(n);
    &upper + &lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::PathBuf;
    use std::sync::atomic::{AtomicUsize, Ordering};

    struct TempFile(PathBuf);

    impl TempFile {
        fn path(&self) -> &Path {
            &self.0
        }
    }

    impl Drop for TempFile {
        fn drop(&mut self) {
            let _ = fs::remove_file(&self.0);
        }
    }

    fn temp_file(contents: &str) -> TempFile {
        static NEXT: AtomicUsize = AtomicUsize::new(0);
        let id = NEXT.fetch_add(1, Ordering::Relaxed);
        let path = std::env::temp_dir().join(format!("likeiper-zeros-{}-{id}.txt", std::process::id()));
        fs::write(&path, contents).unwrap();
        TempFile(path)
    }

    #[test]
    fn parse_three_lines() {
        let f = temp_file("14.134725142\n21.022039639\n25.010857580\n");
        let table = load_zeros(f.path(), None).unwrap();
        assert_eq!(table.count(), 3);
        assert!((table.ordinates[2].to_f64() - 25.01085758).abs() < 1e-12);
    }

    #[test]
    fn empty_and_header_only() {
        let f = temp_file("");
        assert_eq!(load_zeros(f.path(), None).unwrap().count(), 0);
        let f = temp_file("# header\n14.134725142\n");
        assert_eq!(load_zeros(f.path(), None).unwrap().count(), 1);
    }

    #[test]
    fn limit_caps_rows() {
        assert_eq!(sample_zeros(Some(10)).unwrap().count(), 10);
        assert_eq!(sample_zeros(None).unwrap().count(), 100);
    }

    #[test]
    fn parse_error_has_line_number() {
        let f = temp_file("# zeros\n14.134725142\nabc\n");
        match load_zeros(f.path(), None) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            parse_zeros("14.134725142\n14.0\n", "t", None),
            Err(Error::Validation(_))
        ));
        assert!(matches!(parse_zeros("21.022039639\n", "t", None), Err(Error::Validation(_))));
        assert!(matches!(load_zeros("/nonexistent/zeros.txt", None), Err(Error::Io { .. })));
    }

    #[test]
    fn single_pair_first_coefficient() {
        let table = parse_zeros("14.134725142\n", "t", None).unwrap();
        let est = lambda_from_zeros(1, &table, 128).unwrap();
        let t = 14.134725142f64;
        let direct = 1.0 / (0.25 + t * t);
        assert!((est.estimate.to_f64() - direct).abs() < 1e-17);
        assert!((est.estimate.to_f64() - 0.0049995).abs() < 1e-6);
    }

    #[test]
    fn zero_index_and_errors() {
        let table = sample_zeros(Some(5)).unwrap();
        let est = lambda_from_zeros(0, &table, 128).unwrap();
        assert!(est.estimate.is_zero() && est.tail_bound.is_zero());
        assert!(matches!(lambda_from_zeros(-1, &table, 128), Err(Error::InvalidArgument(_))));
        let empty = parse_zeros("", "t", None).unwrap();
        assert!(lambda_from_zeros(1, &empty, 128).is_err());
        assert!(lambda_from_zeros(0, &empty, 128).is_ok());
    }

    #[test]
    fn pair_imaginary_parts_cancel() {
        let table = sample_zeros(None).unwrap();
        let est = lambda_from_zeros(10, &table, 200).unwrap();
        assert!(est.max_pair_imag.abs_below_pow2(-190));
    }

    #[test]
    fn pair_term_matches_angle_form() {
        // 4 sin^2(n theta / 2), theta = 2 atan(1 / 2t)
        for &(t, n) in &[(14.134725142f64, 3u64), (236.524229666, 7), (50.0, 20)] {
            let theta = 2.0 * (0.5 / t).atan();
            let expected = 4.0 * (n as f64 * theta / 2.0).sin().powi(2);
            let got = pair_term(&BigReal::from_f64(t, 128), n, 128).re.to_f64();
            assert!((got - expected).abs() < 1e-14 * expected.max(1e-3), "{got} vs {expected}");
        }
    }

    #[test]
    fn sample_estimates_bracket_li_values() {
        let table = sample_zeros(None).unwrap();
        let li = crate::li::li_coefficients(10, 256).unwrap();
        for n in [1usize, 2, 5, 10] {
            let exact = li.lambda(n).unwrap();
            let mut previous_gap = f64::INFINITY;
            for limit in [10, 50, 100] {
                let est = lambda_from_zeros(n as i64, &table.truncated(limit), 256).unwrap();
                let gap = (exact - &est.estimate).to_f64();
                assert!(gap > 0.0 && gap < previous_gap, "n = {n}, {limit} zeros");
                assert!(gap <= 3.0 * est.tail_bound.to_f64(), "n = {n}, {limit} zeros");
                previous_gap = gap;
            }
        }
    }

    #[test]
    fn chunked_sum_is_deterministic() {
        let table = sample_zeros(None).unwrap();
        let a = lambda_from_zeros(7, &table, 192).unwrap();
        let b = lambda_from_zeros(7, &table, 192).unwrap();
        assert_eq!(a.estimate, b.estimate);
    }
}
