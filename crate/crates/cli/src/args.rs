use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "likeiper",
    version,
    about = "High-precision Li-Keiper coefficients, their trend/tiny split, and related experiments"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Working precision in bits [default: max(256, 2 n-max + 64)]
    #[arg(long, global = true)]
    pub prec_bits: Option<u32>,

    /// Largest index n (default depends on the command)
    #[arg(long, global = true)]
    pub n_max: Option<usize>,

    /// Decimal digits after the point in emitted values (round half to even)
    #[arg(long, global = true, default_value_t = 10)]
    pub digits: u32,

    /// Radius of the circle the Stieltjes constants are extracted on
    #[arg(long, global = true, default_value_t = 0.25)]
    pub radius: f64,

    /// Fixed number of DFT points [default: 8 x count, refined adaptively]
    #[arg(long, global = true)]
    pub dft_points: Option<usize>,

    /// Output format
    #[arg(long = "out", global = true, value_enum, default_value_t = OutFormat::Csv)]
    pub out: OutFormat,

    /// Zero ordinates file, one per line ('#' starts a comment) [default: built-in first 100]
    #[arg(long, global = true)]
    pub zeros_file: Option<PathBuf>,

    /// Read at most this many ordinates
    #[arg(long, global = true)]
    pub zeros_limit: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Log,
    Sqrtlog,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstantsArg {
    Paper,
    Recomputed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TrendConstantArg {
    /// (gamma - log 2 pi - 1) / 2
    Half,
    /// gamma - log 2 pi - 1
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    Computed,
    Reference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepArg {
    DftPoints,
    Precision,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// lambda_n with its trend and tiny parts, n = 1..n-max [default n-max 31]
    Lambda,
    /// Tiny part lambda_tiny(n), n = 1..n-max [default n-max 31]
    Tiny,
    /// Trend part lambda_trend(n), n = 1..n-max [default n-max 31]
    Trend,
    /// Growth table: n, lambda_tiny(n)/(n gamma), lambda_tiny(n), 2 log n [default n-max 31, at most 128]
    Table,
    /// Check |lambda_tiny(n)| against 0.58158 n, gamma n and a log n
    Bounds {
        /// Computed coefficients (n = 1..n-max) or the embedded reference rows
        #[arg(long, value_enum, default_value_t = SourceArg::Computed)]
        source: SourceArg,
        /// Comma-separated slopes a for the a log n family
        #[arg(long, value_delimiter = ',', default_value = "2,5")]
        a_values: Vec<String>,
    },
    /// Partial sum of lambda_n z^n / n against log xi(1/(1-z)) + log 2 [default n-max 60]
    Identity {
        #[arg(long, default_value = "0.5", allow_hyphen_values = true)]
        z: String,
    },
    /// Solve for the tail amplitude a at z = 1/2
    Tailfit {
        #[arg(long, value_enum, default_value_t = ModelArg::Sqrtlog)]
        model: ModelArg,
        #[arg(long, value_enum, default_value_t = ConstantsArg::Paper)]
        constants: ConstantsArg,
        /// Convention for the linear trend constant c
        #[arg(long, value_enum, default_value_t = TrendConstantArg::Half)]
        c_convention: TrendConstantArg,
    },
    /// log xi(N) against its Stirling form, with and without the log pi term [default N = 10..200]
    Asymptotic {
        #[arg(long, default_value_t = 10)]
        n_min: u64,
    },
    /// Envelope curves around c n and their crossing point [default n-max 40]
    Envelope {
        #[arg(long, default_value = "1.596")]
        a_log: String,
        #[arg(long, default_value = "0.386")]
        a_sqrt: String,
        /// Add (n/2) log n to every curve
        #[arg(long)]
        main: bool,
        #[arg(long, value_enum, default_value_t = TrendConstantArg::Half)]
        c_convention: TrendConstantArg,
    },
    /// lambda_n from a table of zeros, with tail bound, against the series value [default n-max 10, at most 50]
    ZerosCheck,
    /// Convergence of lambda_tiny(n) under a doubling sweep
    Diagnostics {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SweepArg::DftPoints)]
        sweep: SweepArg,
    },
}
