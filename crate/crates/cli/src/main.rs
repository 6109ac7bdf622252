use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use surgroup::target::DEFAULT_CAP;
use surgroup::tietze::DEFAULT_BUDGET;

mod cache;
mod commands;
mod slopes;
mod source;

pub const WORKERS_ENV: &str = "SURGROUP_WORKERS";

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_UNRESOLVED: u8 = 3;
pub const EXIT_RESOURCE: u8 = 4;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(surgroup::error::Error),
    Io(String),
}

impl From<surgroup::error::Error> for CliError {
    fn from(e: surgroup::error::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(surgroup::error::Error::CapExceeded { .. }) => EXIT_RESOURCE,
            CliError::Io(_) => EXIT_CHECK_FAILED,
            _ => EXIT_INPUT,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input: {m}"),
            CliError::Core(e) => write!(f, "{}: {e}", e.kind()),
            CliError::Io(m) => write!(f, "io: {m}"),
        }
    }
}

/// Finite-quotient invariants of Dehn surgeries on knots.
#[derive(Parser)]
#[command(name = "surgroup", version)]
struct Cli {
    /// Directory for cached spectra.
    #[arg(long, global = true, default_value = ".surgroup-cache")]
    cache_dir: PathBuf,
    /// Recompute everything and leave the cache alone.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Knot group, peripheral checks, abelianization and Alexander polynomial.
    Knot {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        suite: SuiteArgs,
        /// Also write knot.json into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spectra and pairwise report for a family of surgeries.
    Family {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        slopes: SlopeArgs,
        #[command(flatten)]
        suite: SuiteArgs,
        /// Keep the standard suite even if pairs stay unresolved.
        #[arg(long)]
        no_escalate: bool,
        #[arg(long, default_value = "surgroup-out")]
        out: PathBuf,
    },
    /// Compare the surgery group with the half-complement group per slope.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        slopes: SlopeArgs,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Write presentations as FreeGroup/relator text.
    Export {
        #[command(flatten)]
        source: SourceArgs,
        /// Surgery coefficient q; without it the knot group is exported.
        #[arg(long)]
        q: Option<i64>,
        #[arg(long)]
        p: Option<String>,
        /// surgery, half or double
        #[arg(long, default_value = "surgery")]
        kind: String,
        /// Export a presentation JSON file instead of a knot construction.
        #[arg(long, conflicts_with_all = ["braid", "builtin", "monodromy"])]
        presentation: Option<PathBuf>,
        #[arg(long, default_value = "surgroup-out")]
        out: PathBuf,
    },
}

#[derive(Args, Clone)]
pub struct SourceArgs {
    /// Braid word, e.g. "1 -2 1 -2" or "n=3; s1 S2".
    #[arg(long)]
    braid: Option<String>,
    /// unknot, trefoil or fig8
    #[arg(long)]
    builtin: Option<String>,
    /// Monodromy JSON file.
    #[arg(long)]
    monodromy: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct SlopeArgs {
    #[arg(long)]
    q: i64,
    /// Values of p: "a..b" (inclusive) and/or comma-separated integers.
    #[arg(long)]
    p: String,
}

#[derive(Args, Clone)]
pub struct SuiteArgs {
    /// "standard", "extended" or a path to a target-suite JSON file.
    #[arg(long, default_value = "standard")]
    suite: String,
    /// Largest target order accepted.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Tietze elimination budget.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

fn configure_workers() -> Result<(), CliError> {
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{WORKERS_ENV} must be a positive integer, got `{v}`")))?;
        if n == 0 {
            return Err(CliError::Input(format!("{WORKERS_ENV} must be positive")));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Input(format!("worker pool: {e}")))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    configure_workers()?;
    let cache = cache::Cache::new((!cli.no_cache).then_some(cli.cache_dir));
    match cli.command {
        Command::Knot { source, suite, out } => commands::knot(&source, &suite, out.as_deref()),
        Command::Family { source, slopes, suite, no_escalate, out } => {
            commands::family(&source, &slopes, &suite, !no_escalate, &out, &cache)
        }
        Command::Verify { source, slopes, suite } => commands::verify(&source, &slopes, &suite, &cache),
        Command::Export { source, q, p, kind, presentation, out } => {
            commands::export(&source, q, p.as_deref(), &kind, presentation.as_deref(), &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
