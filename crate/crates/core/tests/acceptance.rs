//! Acceptance suite. Prints one PASS/FAIL line per criterion (with sub-checks
//! indented underneath) and exits non-zero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use likeiper::experiments::{
    asymptotic_logxi, check_bounds, conjecture_table, envelope_data, identity_sum_from, log_pi_over_3, tail_fit,
    BoundFamily, BoundSource, ConstantsSource, ReferenceDataset, RowSource, TailModel, TrendConstant,
    DEFAULT_A_LOG, DEFAULT_A_SQRT,
};
use likeiper::format::fixed;
use likeiper::kernel::{euler_gamma, BigReal};
use likeiper::li::{
    li_coefficients, tiny_coefficients, tiny_u_series, trend_u_series, StieltjesConfig,
};
use likeiper::series::{TruncatedSeries, Variable};
use likeiper::zeros::{lambda_from_zeros, load_zeros};
use likeiper::Error;

const TABLE_PREC: u32 = 512;
const TABLE_RUNTIME: Duration = Duration::from_secs(60);

#[derive(Debug)]
enum Status {
    Pass,
    Fail,
    Skip,
}

struct Check {
    label: String,
    status: Status,
    detail: String,
}

fn check(label: &str, ok: bool, detail: String) -> Check {
    Check {
        label: label.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
    }
}

fn skip(label: &str, detail: String) -> Check {
    Check {
        label: label.into(),
        status: Status::Skip,
        detail,
    }
}

fn f(x: &BigReal, digits: u32) -> String {
    fixed(x, digits)
}

fn abs_diff(a: &BigReal, b: &BigReal) -> f64 {
    (a - b).abs().to_f64()
}

fn dec(s: &str, prec: u32) -> BigReal {
    BigReal::parse(s, prec).unwrap()
}

fn criterion_1() -> Vec<Check> {
    let start = Instant::now();
    let tiny = tiny_coefficients(31, TABLE_PREC).unwrap();
    let elapsed = start.elapsed();
    let reference = ReferenceDataset::embedded();
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for row in reference.by_source(RowSource::Table) {
        let printed = row.tiny_value(TABLE_PREC);
        let ours = &tiny[row.n as usize - 1];
        let unit = 10f64.powi(-(row.tiny_decimals() as i32));
        checked += 1;
        // one unit in the last printed place, plus binary slack for the decimal parse
        if abs_diff(ours, &printed) > unit * (1.0 + 1e-9) {
            mismatches.push(format!("n={} printed {} computed {}", row.n, row.tiny, f(ours, 7)));
        }
    }
    vec![
        check(
            "table rows within one unit of the last printed digit",
            mismatches.is_empty(),
            if mismatches.is_empty() {
                format!("{checked} rows")
            } else {
                format!("{} of {checked} rows differ: {}", mismatches.len(), mismatches.join("; "))
            },
        ),
        check(
            "runtime at 512 bits under 60 s",
            elapsed < TABLE_RUNTIME,
            format!("{:.2} s", elapsed.as_secs_f64()),
        ),
    ]
}

fn criterion_2() -> Vec<Check> {
    let tiny = tiny_coefficients(6, 256).unwrap();
    let t5 = &tiny[4];
    let t6 = &tiny[5] / 6;
    let d5 = abs_diff(t5, &dec("1.45826850020", 256));
    let d6 = abs_diff(&t6, &dec("0.2480497212", 256));
    vec![
        check("lambda_tiny(5) = 1.45826850020", d5 < 1e-9, format!("{} (diff {d5:.1e})", f(t5, 14))),
        check("lambda_tiny(6)/6 = 0.2480497212", d6 < 1e-9, format!("{} (diff {d6:.1e})", f(&t6, 13))),
    ]
}

fn criterion_3() -> Vec<Check> {
    let table = li_coefficients(15, 256).unwrap();
    let half = BigReal::pow2(-1, 256);
    let s = identity_sum_from(&table, &half, 15).unwrap();
    let d = abs_diff(&s, &dec("0.04610606601", 256));
    vec![check(
        "sum_{n<=15} lambda_n 2^-n / n = 0.04610606601 to 1e-9",
        d < 1e-9,
        format!("computed {} (diff {d:.2e})", f(&s, 15)),
    )]
}

fn criterion_4() -> Vec<Check> {
    let table = li_coefficients(60, 256).unwrap();
    let half = BigReal::pow2(-1, 256);
    let s = identity_sum_from(&table, &half, 60).unwrap();
    let target = log_pi_over_3(256).unwrap();
    let d = abs_diff(&s, &target);
    vec![check(
        "|sum_{n<=60} lambda_n 2^-n / n - log(pi/3)| < 1e-12",
        d < 1e-12,
        format!("sum {} log(pi/3) {} (diff {d:.2e})", f(&s, 15), f(&target, 15)),
    )]
}

fn criterion_4_note() -> String {
    let target = log_pi_over_3(256).unwrap();
    format!(
        "printed 11-digit log(pi/3) is 0.04611759699; computed value rounds to {}",
        f(&target, 11)
    )
}

fn criterion_5() -> Vec<Check> {
    let cfg = StieltjesConfig::default();
    let sq = tail_fit(TailModel::SqrtLog, ConstantsSource::Paper, TrendConstant::Half, 256, &cfg).unwrap();
    let d_sq = abs_diff(&sq.a, &dec("-0.3869721386", 256));
    let lg = tail_fit(TailModel::Log, ConstantsSource::Paper, TrendConstant::Half, 256, &cfg).unwrap();
    let d_lg = abs_diff(&lg.a, &dec("-0.1596", 256));
    vec![
        check(
            "sqrt-log model, printed constants: a = -0.3869721386 to 1e-9",
            d_sq < 1e-9,
            format!("a = {} (diff {d_sq:.2e})", f(&sq.a, 10)),
        ),
        check(
            "log model, printed constants: a = -0.1596 +- 1e-4, discrepancy with printed -1.59599 flagged",
            d_lg <= 1e-4 && lg.discrepancy && lg.printed_a == "-1.59599",
            format!("a = {} flagged = {}", f(&lg.a, 7), lg.discrepancy),
        ),
        check(
            "fit identity holds to 1e-12 in both models",
            sq.residual.abs().to_f64() < 1e-12 && lg.residual.abs().to_f64() < 1e-12,
            format!("residuals {:.1e}, {:.1e}", sq.residual.to_f64(), lg.residual.to_f64()),
        ),
    ]
}

fn criterion_6() -> Vec<Check> {
    let prec = 128;
    let a_log = dec(DEFAULT_A_LOG, prec);
    let a_sqrt = dec(DEFAULT_A_SQRT, prec);
    let env = envelope_data(40, &a_log, &a_sqrt, false, TrendConstant::Half, prec).unwrap();
    let x = env.crossing.to_f64();
    let root_gap = (env.crossing.sqrt() - &(&a_log / &a_sqrt)).abs().to_f64();
    vec![check(
        "crossing of 0.386 sqrt(n) log n and 1.596 log n in (16.5, 17.5)",
        x > 16.5 && x < 17.5 && root_gap < 1e-9,
        format!("n* = {}", f(&env.crossing, 6)),
    )]
}

fn criterion_7() -> Vec<Check> {
    let cfg = StieltjesConfig::default();
    let prec = 256;
    let report = check_bounds(BoundSource::Reference, &["2".to_string()], prec, &cfg).unwrap();
    let gamma = euler_gamma(prec).unwrap();
    let table_ok = report
        .rows
        .iter()
        .filter(|r| r.source == Some(RowSource::Table))
        .all(|r| r.verdicts.iter().find(|v| v.family == BoundFamily::EulerGamma).unwrap().holds == Some(true));
    let first = &report.rows[0];
    let first_gap = abs_diff(&first.tiny, &gamma);

    let computed = check_bounds(BoundSource::Computed { n_max: 31 }, &[], prec, &cfg).unwrap();
    let computed_first = computed.rows[0]
        .verdicts
        .iter()
        .find(|v| v.family == BoundFamily::EulerGamma)
        .unwrap();

    let two = BoundFamily::Log("2".into());
    let all_two = report.all_hold(&two);
    let (tight_row, tight_margin) = report.tightest(&two).unwrap();
    vec![
        check(
            "|tiny| <= gamma n on all table rows, equality at n = 1",
            table_ok && first_gap < 1e-6 && computed_first.margin.as_ref().is_some_and(BigReal::is_zero),
            format!("computed margin at n = 1: {}", f(computed_first.margin.as_ref().unwrap(), 20)),
        ),
        check(
            "|tiny| <= 2 log n on every embedded row, tightest at n = 5080",
            all_two && tight_row.n == 5080,
            format!(
                "tightest n = {} margin {} (|tiny| {} vs 2 log n {})",
                tight_row.n,
                f(tight_margin, 4),
                f(&tight_row.tiny, 3),
                f(&(BigReal::from_u64(5080, prec).ln() * 2), 3)
            ),
        ),
    ]
}

fn criterion_8() -> Vec<Check> {
    let rows = asymptotic_logxi(10, 200, 256).unwrap();
    let closer = rows.iter().all(|r| r.err_corrected.abs() < r.err_verbatim.abs());
    let last = rows.last().unwrap();
    let half_log_pi = std::f64::consts::PI.ln() / 2.0;
    let slope = last.err_verbatim.to_f64() / 200.0;
    let rel = (slope / half_log_pi - 1.0).abs();
    vec![
        check(
            "|err_corrected| < |err_verbatim| for N = 10..200",
            closer,
            format!("{} rows", rows.len()),
        ),
        check(
            "err_verbatim(200)/200 within 1% of (1/2) log pi",
            rel < 0.01,
            format!("{slope:.6} vs {half_log_pi:.6} ({:.3}%)", rel * 100.0),
        ),
    ]
}

fn criterion_9() -> Vec<Check> {
    let mut out = Vec::new();
    let prec = 256;
    let n = 32;
    let cfg = StieltjesConfig::default();

    // two routes from the same u-series
    let (log_h, set) = tiny_u_series(n, prec, &cfg).unwrap();
    let pulled = TruncatedSeries::binomial_pullback(&log_h, n).unwrap();
    let composed = TruncatedSeries::compose(&log_h, &TruncatedSeries::u_of_z(n, set.working_prec)).unwrap();
    let worst = (1..=n)
        .map(|k| abs_diff(&pulled.coeffs()[k], &composed.coeffs()[k]) * k as f64)
        .fold(0.0, f64::max);
    out.push(check("tiny: pullback and composition agree to 1e-20, n <= 32", worst < 1e-20, format!("max diff {worst:.1e}")));

    // full coefficient from the summed u-series against trend + tiny
    let table = li_coefficients(n, prec).unwrap();
    let total = trend_u_series(n, prec).unwrap().add(&log_h).unwrap();
    let full = TruncatedSeries::binomial_pullback(&total, n).unwrap();
    let worst = table
        .rows
        .iter()
        .map(|r| {
            let direct = &full.coeffs()[r.n] * r.n as i64;
            abs_diff(&direct, &(&r.trend + &r.tiny)).max(abs_diff(&r.lambda, &(&r.trend + &r.tiny)))
        })
        .fold(0.0, f64::max);
    out.push(check("trend + tiny = full to 1e-20", worst < 1e-20, format!("max diff {worst:.1e}")));

    // precision doubling
    let hi = li_coefficients(n, 2 * prec).unwrap();
    let worst = table
        .rows
        .iter()
        .zip(&hi.rows)
        .map(|(a, b)| {
            abs_diff(&a.lambda, &b.lambda)
                .max(abs_diff(&a.trend, &b.trend))
                .max(abs_diff(&a.tiny, &b.tiny))
        })
        .fold(0.0, f64::max);
    out.push(check(
        "precision doubling 256 -> 512 bits moves no value by more than 1e-60",
        worst < 1e-60,
        format!("max change {worst:.1e}"),
    ));

    // log/exp round trip on a series with non-trivial coefficients
    let coeffs: Vec<f64> = (0..=40).map(|k| if k == 0 { 0.0 } else { ((k * 7919) % 13) as f64 / 7.0 - 0.9 }).collect();
    let a = TruncatedSeries::from_f64(Variable::U, &coeffs, prec);
    let back = a.exp().unwrap().log().unwrap();
    let worst = a
        .coeffs()
        .iter()
        .zip(back.coeffs())
        .map(|(x, y)| abs_diff(x, y) / x.abs().to_f64().max(1.0))
        .fold(0.0, f64::max);
    let b = TruncatedSeries::one(Variable::U, 40, prec).add(&a.truncate(40)).unwrap();
    let again = b.log().unwrap().exp().unwrap();
    let worst2 = b.coeffs().iter().zip(again.coeffs()).map(|(x, y)| abs_diff(x, y)).fold(0.0, f64::max);
    out.push(check(
        "series log(exp a) = a and exp(log b) = b",
        worst < 1e-50 && worst2 < 1e-40,
        format!("max diff {worst:.1e}, {worst2:.1e}"),
    ));

    // zero sum with a large table, if one is provided
    match std::env::var_os("LIKEIPER_ZEROS_FILE") {
        Some(path) => {
            let zeros = load_zeros(&path, None).unwrap();
            if zeros.count() < 100_000 {
                out.push(skip(
                    "zeros: lambda_1 within 3 x tail bound",
                    format!("{} has only {} zeros (need 1e5)", zeros.source_path, zeros.count()),
                ));
            } else {
                let est = lambda_from_zeros(1, &zeros, prec).unwrap();
                let exact = table.lambda(1).unwrap();
                let gap = abs_diff(exact, &est.estimate);
                let tail = est.tail_bound.to_f64();
                out.push(check(
                    "zeros: lambda_1 within 3 x tail bound",
                    gap <= 3.0 * tail,
                    format!("{} zeros, gap {gap:.3e}, tail {tail:.3e}", zeros.count()),
                ));
            }
        }
        None => out.push(skip(
            "zeros: lambda_1 within 3 x tail bound",
            "set LIKEIPER_ZEROS_FILE to a file with at least 1e5 ordinates".into(),
        )),
    }
    out
}

fn criterion_10() -> Vec<Check> {
    let cfg = StieltjesConfig::default();
    let capped = matches!(conjecture_table(500, 256, &cfg), Err(Error::InvalidArgument(_)));
    let report = check_bounds(BoundSource::Reference, &["2".into(), "5".into()], 256, &cfg).unwrap();
    let large: Vec<_> = report.rows.iter().filter(|r| r.n >= 500).collect();
    let five = BoundFamily::Log("5".into());
    let covered = !large.is_empty()
        && large.iter().all(|r| r.verdicts.iter().any(|v| v.family == five && v.holds == Some(true)));
    vec![check(
        "n >= 500 only via fixture bound checks; direct computation refused",
        capped && covered,
        format!("{} large-n fixture rows checked, table cap enforced = {capped}", large.len()),
    )]
}

type Criterion = fn() -> Vec<Check>;

fn run(number: u32, f: Criterion) -> bool {
    let result = panic::catch_unwind(AssertUnwindSafe(f));
    let checks = match result {
        Ok(c) => c,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            vec![check("evaluation", false, format!("panicked: {msg}"))]
        }
    };
    let failed = checks.iter().any(|c| matches!(c.status, Status::Fail));
    println!("criterion {number:>2}: {}", if failed { "FAIL" } else { "PASS" });
    for c in &checks {
        let tag = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        };
        println!("    [{tag}] {}: {}", c.label, c.detail);
    }
    !failed
}

fn main() {
    let criteria: [(u32, Criterion); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    println!("acceptance suite");
    let mut failures = Vec::new();
    for (number, f) in criteria {
        if !run(number, f) {
            failures.push(number);
        }
        if number == 4 {
            println!("    [note] {}", criterion_4_note());
        }
    }
    if failures.is_empty() {
        println!("all criteria pass");
    } else {
        println!("failing criteria: {failures:?}");
        std::process::exit(1);
    }
}
