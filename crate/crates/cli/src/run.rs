use std::path::PathBuf;

use likeiper::experiments::{
    asymptotic_logxi, check_bounds, conjecture_table, convergence_diagnostics, envelope_data, identity_limit,
    identity_sum_from, tail_fit, BoundSource, ConstantsSource, Sweep, TailModel, TrendConstant,
};
use likeiper::format::{max_digits, Cell, OutputFormat, Table};
use likeiper::kernel::{BigReal, MIN_PREC};
use likeiper::li::{default_precision, li_coefficients_with, StieltjesConfig};
use likeiper::zeros::{lambda_from_zeros, load_zeros, sample_zeros};
use likeiper::{Error, Result};

use crate::args::{Command, ConstantsArg, GlobalArgs, ModelArg, OutFormat, SourceArg, SweepArg, TrendConstantArg};

/// Largest n the zero-sum route is used for.
const ZEROS_CAP: usize = 50;

/// Validated settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub prec_bits: u32,
    pub n_max: usize,
    pub digits: u32,
    pub stieltjes: StieltjesConfig,
    pub out_format: OutputFormat,
    pub zeros_file: Option<PathBuf>,
    pub zeros_limit: Option<usize>,
}

impl RunConfig {
    pub fn new(args: &GlobalArgs, default_n_max: usize) -> Result<Self> {
        let n_max = args.n_max.unwrap_or(default_n_max);
        if n_max < 1 {
            return Err(Error::InvalidArgument("--n-max must be at least 1".into()));
        }
        let prec_bits = args.prec_bits.unwrap_or_else(|| default_precision(n_max));
        if prec_bits < MIN_PREC {
            return Err(Error::InvalidArgument(format!("--prec-bits must be at least {MIN_PREC}")));
        }
        if args.digits > max_digits(prec_bits) {
            return Err(Error::InvalidArgument(format!(
                "--digits {} exceeds the {} decimals that {prec_bits} bits carry",
                args.digits,
                max_digits(prec_bits)
            )));
        }
        let stieltjes = StieltjesConfig {
            radius: args.radius,
            points: args.dft_points,
        };
        stieltjes.validate()?;
        Ok(RunConfig {
            prec_bits,
            n_max,
            digits: args.digits,
            stieltjes,
            out_format: match args.out {
                OutFormat::Csv => OutputFormat::Csv,
                OutFormat::Json => OutputFormat::Json,
            },
            zeros_file: args.zeros_file.clone(),
            zeros_limit: args.zeros_limit,
        })
    }
}

/// Rendered output plus notes meant for stderr.
pub struct Output {
    pub body: String,
    pub notes: Vec<String>,
}

pub fn run(command: &Command, args: &GlobalArgs) -> Result<Output> {
    let default_n_max = match command {
        Command::Identity { .. } => 60,
        Command::Asymptotic { .. } => 200,
        Command::Envelope { .. } => 40,
        Command::ZerosCheck => 10,
        _ => 31,
    };
    let cfg = RunConfig::new(args, default_n_max)?;
    let mut notes = Vec::new();
    let table = match command {
        Command::Lambda => {
            let li = li_coefficients_with(cfg.n_max, cfg.prec_bits, &cfg.stieltjes)?;
            let mut t = Table::new(["n", "lambda", "trend", "tiny"]);
            for r in li.rows {
                t.push(vec![r.n.into(), r.lambda.into(), r.trend.into(), r.tiny.into()]);
            }
            t
        }
        Command::Tiny | Command::Trend => {
            let li = li_coefficients_with(cfg.n_max, cfg.prec_bits, &cfg.stieltjes)?;
            let tiny = matches!(command, Command::Tiny);
            let mut t = Table::new(["n", if tiny { "tiny" } else { "trend" }]);
            for r in li.rows {
                t.push(vec![r.n.into(), if tiny { r.tiny } else { r.trend }.into()]);
            }
            t
        }
        Command::Table => {
            let rows = conjecture_table(cfg.n_max, cfg.prec_bits, &cfg.stieltjes)?;
            let mut t = Table::new(["n", "ratio", "tiny", "two_log_n"]);
            for r in rows {
                t.push(vec![r.n.into(), r.ratio.into(), r.tiny.into(), r.two_log_n.into()]);
            }
            t
        }
        Command::Bounds { source, a_values } => {
            let source = match source {
                SourceArg::Computed => BoundSource::Computed { n_max: cfg.n_max },
                SourceArg::Reference => BoundSource::Reference,
            };
            let report = check_bounds(source, a_values, cfg.prec_bits, &cfg.stieltjes)?;
            let mut columns = vec!["n".to_string(), "source".into(), "tiny".into()];
            for f in &report.families {
                columns.push(format!("bound[{f}]"));
                columns.push(format!("margin[{f}]"));
                columns.push(format!("holds[{f}]"));
            }
            let mut t = Table::new(columns);
            for row in report.rows {
                let mut cells: Vec<Cell> = vec![
                    row.n.into(),
                    row.source.map_or_else(|| "COMPUTED".to_string(), |s| s.to_string()).into(),
                    row.tiny.into(),
                ];
                for v in row.verdicts {
                    cells.push(v.bound.into());
                    cells.push(v.margin.into());
                    cells.push(v.holds.map_or_else(|| "n/a".to_string(), |h| h.to_string()).into());
                }
                t.push(cells);
            }
            notes.extend(report.notes);
            t
        }
        Command::Identity { z } => {
            let z = BigReal::parse(z, cfg.prec_bits)?;
            let li = li_coefficients_with(cfg.n_max, cfg.prec_bits, &cfg.stieltjes)?;
            let sum = identity_sum_from(&li, &z, cfg.n_max)?;
            let limit = identity_limit(&z, cfg.prec_bits)?;
            let mut t = Table::new(["z", "n_max", "partial_sum", "limit", "difference"]);
            let difference = &sum - &limit;
            t.push(vec![z.into(), cfg.n_max.into(), sum.into(), limit.into(), difference.into()]);
            t
        }
        Command::Tailfit {
            model,
            constants,
            c_convention,
        } => {
            let model = match model {
                ModelArg::Log => TailModel::Log,
                ModelArg::Sqrtlog => TailModel::SqrtLog,
            };
            let source = match constants {
                ConstantsArg::Paper => ConstantsSource::Paper,
                ConstantsArg::Recomputed => ConstantsSource::Recomputed,
            };
            let prec = args.prec_bits.unwrap_or(default_precision(15));
            let fit = tail_fit(model, source, trend_constant(*c_convention), prec, &cfg.stieltjes)?;
            if fit.discrepancy {
                notes.push(format!("solved a differs from the printed a = {}", fit.printed_a));
            }
            let mut t = Table::new([
                "model",
                "constants",
                "c_convention",
                "partial_sum",
                "tail_trend",
                "tail_model",
                "target",
                "a",
                "residual",
                "printed_a",
                "discrepancy",
            ]);
            t.push(vec![
                fit.model.to_string().into(),
                fit.constants_source.to_string().into(),
                format!("{:?}", fit.trend_constant).to_uppercase().into(),
                fit.partial_sum.into(),
                fit.tail_trend.into(),
                fit.tail_model.into(),
                fit.target.into(),
                fit.a.into(),
                fit.residual.into(),
                fit.printed_a.into(),
                fit.discrepancy.into(),
            ]);
            t
        }
        Command::Asymptotic { n_min } => {
            let prec = args.prec_bits.unwrap_or(256);
            let rows = asymptotic_logxi(*n_min, cfg.n_max as u64, prec)?;
            let mut t = Table::new([
                "N",
                "exact",
                "approx_verbatim",
                "approx_corrected",
                "err_verbatim",
                "err_corrected",
            ]);
            for r in rows {
                t.push(vec![
                    r.n.into(),
                    r.exact.into(),
                    r.approx_verbatim.into(),
                    r.approx_corrected.into(),
                    r.err_verbatim.into(),
                    r.err_corrected.into(),
                ]);
            }
            t
        }
        Command::Envelope {
            a_log,
            a_sqrt,
            main,
            c_convention,
        } => {
            let prec = cfg.prec_bits;
            let a_log = BigReal::parse(a_log, prec)?;
            let a_sqrt = BigReal::parse(a_sqrt, prec)?;
            let env = envelope_data(
                cfg.n_max as u64,
                &a_log,
                &a_sqrt,
                *main,
                trend_constant(*c_convention),
                prec,
            )?;
            notes.push(format!(
                "envelopes cross at n = {}",
                likeiper::format::fixed(&env.crossing, cfg.digits)
            ));
            let mut t = Table::new(["n", "trend", "sqrt_upper", "sqrt_lower", "log_upper", "log_lower"]);
            for r in env.rows {
                t.push(vec![
                    r.n.into(),
                    r.trend.into(),
                    r.sqrt_upper.into(),
                    r.sqrt_lower.into(),
                    r.log_upper.into(),
                    r.log_lower.into(),
                ]);
            }
            t
        }
        Command::ZerosCheck => {
            if cfg.n_max > ZEROS_CAP {
                return Err(Error::InvalidArgument(format!(
                    "the zero-sum route is limited to n <= {ZEROS_CAP}"
                )));
            }
            let zeros = match &cfg.zeros_file {
                Some(path) => load_zeros(path, cfg.zeros_limit)?,
                None => sample_zeros(cfg.zeros_limit)?,
            };
            notes.push(format!("{} zeros from {}", zeros.count(), zeros.source_path));
            let li = li_coefficients_with(cfg.n_max, cfg.prec_bits, &cfg.stieltjes)?;
            let mut t = Table::new([
                "n",
                "zeros",
                "estimate",
                "tail_bound",
                "lambda",
                "difference",
                "within_3_tail",
            ]);
            for r in &li.rows {
                let est = lambda_from_zeros(r.n as i64, &zeros, cfg.prec_bits)?;
                let difference = &r.lambda - &est.estimate;
                let within = difference.abs() <= &est.tail_bound * 3;
                t.push(vec![
                    r.n.into(),
                    zeros.count().into(),
                    est.estimate.into(),
                    est.tail_bound.into(),
                    (&r.lambda).into(),
                    difference.into(),
                    within.into(),
                ]);
            }
            t
        }
        Command::Diagnostics { n, sweep } => {
            let sweep = match sweep {
                SweepArg::DftPoints => Sweep::DftPoints,
                SweepArg::Precision => Sweep::Precision,
            };
            let prec = args.prec_bits.unwrap_or_else(|| default_precision(*n));
            let rows = convergence_diagnostics(*n, sweep, prec, cfg.stieltjes.radius)?;
            let mut t = Table::new(["sweep", "parameter", "estimate", "step"]);
            for r in rows {
                t.push(vec![sweep.to_string().into(), r.parameter.into(), r.estimate.into(), r.step.into()]);
            }
            t
        }
    };
    Ok(Output {
        body: table.render(cfg.out_format, cfg.digits),
        notes,
    })
}

fn trend_constant(arg: TrendConstantArg) -> TrendConstant {
    match arg {
        TrendConstantArg::Half => TrendConstant::Half,
        TrendConstantArg::Full => TrendConstant::Full,
    }
}
