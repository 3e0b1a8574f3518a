//! Command-line front end for the critical-line toolkit: point evaluation,
//! zero finding with a persistent cache, rectangle scans with CSV output,
//! re-verification, and the classical equivalent-criterion reports.
//!
//! Exit codes: 0 success, 2 usage or parameter error, 3 compute error
//! (the engine error name is printed to standard error), 4 verification
//! failure.

mod commands;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{usage, CmdResult};

#[derive(Parser)]
#[command(name = "critline", version, about = "Riemann zeta numerics on the critical strip")]
struct Cli {
    /// Worker threads for grid scans (default: machine parallelism).
    /// The CRITLINE_THREADS environment variable overrides this flag.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate zeta at one point and print a JSON object
    Eval(EvalArgs),
    /// Scan a critical-line range, refine and verify zeros, append them to a cache
    Zeros(ZerosArgs),
    /// Evaluate a rectangle grid to CSV and print a scan report
    Scan(ScanArgs),
    /// Re-verify cached zeros and/or the functional-equation grid
    Verify(VerifyArgs),
    /// Run one classical criterion and print its report as JSON
    Criteria(CriteriaArgs),
    /// Summarize a zero cache
    Report(ReportArgs),
}

/// Shared truncation and tolerance flags.
#[derive(Args, Clone, Copy)]
struct PrecisionFlags {
    /// Series truncation length
    #[arg(long = "N", default_value_t = 100_000)]
    n: u64,

    /// Continuation depth for arguments left of re = 1 (1..=12)
    #[arg(long = "K", default_value_t = 6)]
    k: u32,

    /// Tail-tolerance gate; evaluations whose error bound exceeds it fail
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,

    /// Exclusion radius around the pole at z = 1
    #[arg(long, default_value_t = 1e-6)]
    pole_radius: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineChoice {
    /// Pick the engine from the region of the argument
    Auto,
    /// Truncated Dirichlet series with integral correction (re >= 1.5)
    Direct,
    /// Integral-remainder continuation (re > 0)
    Eq1,
    /// Recursive level-K continuation (re > 1 - K)
    Levelk,
    /// Alternating-series cross-check engine (re > 0)
    Eta,
}

#[derive(Args)]
struct EvalArgs {
    /// Real part of the argument
    #[arg(long, allow_negative_numbers = true)]
    re: f64,

    /// Imaginary part of the argument
    #[arg(long, allow_negative_numbers = true)]
    im: f64,

    /// Engine selection
    #[arg(long, value_enum, default_value_t = EngineChoice::Auto)]
    engine: EngineChoice,

    #[command(flatten)]
    precision: PrecisionFlags,
}

#[derive(Args)]
struct ZerosArgs {
    /// Lower end of the ordinate range (y >= 0)
    #[arg(long)]
    ymin: f64,

    /// Upper end of the ordinate range
    #[arg(long)]
    ymax: f64,

    /// Scan grid step (0 < step <= 0.25)
    #[arg(long, default_value_t = 0.05)]
    step: f64,

    /// Zero cache path (JSON-lines, created if absent)
    #[arg(long)]
    out: PathBuf,

    #[command(flatten)]
    precision: PrecisionFlags,
}

#[derive(Args)]
struct ScanArgs {
    /// Left edge of the rectangle (0 < xmin)
    #[arg(long)]
    xmin: f64,

    /// Right edge of the rectangle (xmax < 1)
    #[arg(long)]
    xmax: f64,

    /// Bottom edge of the rectangle
    #[arg(long, allow_negative_numbers = true)]
    ymin: f64,

    /// Top edge of the rectangle (ymin == ymax writes a header-only CSV)
    #[arg(long, allow_negative_numbers = true)]
    ymax: f64,

    /// Horizontal grid step
    #[arg(long, default_value_t = 0.02)]
    dx: f64,

    /// Vertical grid step
    #[arg(long, default_value_t = 0.02)]
    dy: f64,

    /// CSV output path
    #[arg(long)]
    out: PathBuf,

    #[command(flatten)]
    precision: PrecisionFlags,
}

#[derive(Args)]
struct VerifyArgs {
    /// Zero cache to re-verify (JSON-lines)
    #[arg(long)]
    zeros: Option<PathBuf>,

    /// Also check the functional-equation residual over a strip grid
    #[arg(long)]
    grid: bool,

    /// Series truncation length (moderate by default: left of the strip,
    /// accumulated rounding grows with N and larger is not better)
    #[arg(long = "N", default_value_t = 50_000)]
    n: u64,

    /// Continuation depth (1..=12)
    #[arg(long = "K", default_value_t = 5)]
    k: u32,

    /// Verification tolerance; thresholds scale with its square root
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,

    /// Exclusion radius around the pole at z = 1
    #[arg(long, default_value_t = 1e-6)]
    pole_radius: f64,
}

#[derive(Args)]
struct CriteriaArgs {
    #[command(subcommand)]
    which: CriteriaCommand,
}

#[derive(Subcommand)]
enum CriteriaCommand {
    /// Redheffer determinant versus the Mertens function
    Redheffer {
        /// Check one exact determinant det(A(n)) against the sieve
        #[arg(long)]
        n: Option<usize>,

        /// Sweep the empirical growth constant over 1..=max-n
        #[arg(long)]
        max_n: Option<usize>,

        /// Growth exponent offset for the sweep
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
    },
    /// Harmonic-number bound on the divisor sum, swept over 1..=max-n
    Lagarias {
        #[arg(long)]
        max_n: u64,
    },
    /// Least-squares distance from the constant 1 to a dilation span
    NymanBeurling {
        /// Number of alpha values; the set is {1/2, 1/3, ..., 1/(alphas+1)}
        #[arg(long)]
        alphas: usize,

        /// Quadrature window parameter; integration runs over (1/cap, 1)
        #[arg(long, default_value_t = 64)]
        quad_cap: u32,
    },
    /// Dirichlet L-function for the principal character mod k
    Lfunction {
        /// Modulus of the principal character
        #[arg(long = "k")]
        modulus: u64,

        /// Real part of the evaluation point
        #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
        re: f64,

        /// Imaginary part of the evaluation point
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        im: f64,

        #[command(flatten)]
        precision: PrecisionFlags,
    },
}

#[derive(Args)]
struct ReportArgs {
    /// Zero cache to summarize
    #[arg(long, default_value = "zeros.jsonl")]
    zeros: PathBuf,
}

fn run(cli: &Cli) -> CmdResult {
    let threads = match std::env::var("CRITLINE_THREADS") {
        Ok(raw) => Some(
            raw.parse::<usize>()
                .map_err(|_| usage("CRITLINE_THREADS must be a positive integer"))?,
        ),
        Err(_) => cli.threads,
    };
    if let Some(t) = threads {
        if t == 0 {
            return Err(usage("thread count must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().ok();
    }
    match &cli.command {
        Command::Eval(a) => commands::eval(a),
        Command::Zeros(a) => commands::zeros(a),
        Command::Scan(a) => commands::scan(a),
        Command::Verify(a) => commands::verify(a),
        Command::Criteria(a) => commands::criteria(a),
        Command::Report(a) => commands::report(a),
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(&cli) {
        Ok(()) => 0,
        Err(failure) => failure.code,
    });
}
