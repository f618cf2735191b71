//! `vrhq` command-line interface. [`run`] is the whole program; the binary
//! only forwards process arguments and streams.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
pub mod output;

pub use output::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "vrhq",
    version,
    about = "Connectivity bounds and verification kernels for Vietoris-Rips complexes of hypercubes"
)]
pub struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, env = "VRHQ_FORMAT", default_value = "json")]
    pub format: Format,

    /// Worker threads for the parallel kernels.
    #[arg(long, global = true, env = "VRHQ_THREADS", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connectivity lower bound for VR(Q_n; r).
    Bound {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
    },
    /// Bounds over a grid of (n, r), or the published rows.
    Table {
        /// Emit the published rows with agreement flags.
        #[arg(long, conflicts_with_all = ["n_max", "r_max"])]
        paper: bool,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        /// Largest r per row; defaults to n - 1.
        #[arg(long)]
        r_max: Option<u32>,
    },
    /// Pairs whose bound forces H_{r+1} to vanish.
    Counterexamples {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
    },
    /// Total domination number of G^c_{n,r} or of a DIMACS graph.
    GammaT(GammaTArgs),
    /// Build VR(Q_n; r) up to a dimension.
    Complex {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        max_dim: usize,
        /// Write the complex to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "VRHQ_MAX_SIMPLICES", default_value_t = vrhq_core::complexes::DEFAULT_MAX_SIMPLICES)]
        max_simplices: u64,
    },
    /// Reduced homology of VR(Q_n; r) or of a complex file.
    Homology(HomologyArgs),
    /// Cross-polytope pattern and domination check for a vertex set.
    Witness {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        /// Comma-separated labels, decimal or 0b-prefixed binary.
        #[arg(long)]
        vertices: String,
    },
}

#[derive(Debug, Args)]
pub struct GammaTArgs {
    #[arg(long, requires = "r", conflicts_with = "dimacs")]
    pub n: Option<u32>,
    #[arg(long, requires = "n")]
    pub r: Option<u32>,
    #[arg(long, required_unless_present = "n")]
    pub dimacs: Option<PathBuf>,
    /// Wall-clock budget, e.g. `90s` or `10m`; on expiry bounds are reported.
    #[arg(long, env = "VRHQ_TIME_LIMIT")]
    pub time_limit: Option<humantime::Duration>,
    /// Plain subset enumeration (at most 20 vertices).
    #[arg(long)]
    pub exhaustive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoefficientArg {
    Gf2,
    Z,
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    #[arg(long, requires = "r", conflicts_with = "complex")]
    pub n: Option<u32>,
    #[arg(long, requires = "n")]
    pub r: Option<u32>,
    #[arg(long, required_unless_present = "n")]
    pub complex: Option<PathBuf>,
    #[arg(long)]
    pub up_to: usize,
    #[arg(long, value_enum, default_value = "gf2")]
    pub coefficients: CoefficientArg,
    #[arg(long, env = "VRHQ_MAX_SIMPLICES", default_value_t = vrhq_core::complexes::DEFAULT_MAX_SIMPLICES)]
    pub max_simplices: u64,
    #[arg(long, env = "VRHQ_SNF_CAP", default_value_t = vrhq_core::homology::DEFAULT_SNF_CAP)]
    pub snf_cap: usize,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Bound { .. } => "bound",
            Command::Table { .. } => "table",
            Command::Counterexamples { .. } => "counterexamples",
            Command::GammaT(_) => "gamma-t",
            Command::Complex { .. } => "complex",
            Command::Homology(_) => "homology",
            Command::Witness { .. } => "witness",
        }
    }
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<vrhq_core::Error> for Failure {
    fn from(e: vrhq_core::Error) -> Self {
        use vrhq_core::Error as E;
        let code = match e {
            E::Parse { .. } | E::InconsistentHeader { .. } | E::IsolatedVertex(_) | E::TruncationTooShallow { .. } => {
                EXIT_INPUT
            }
            E::TooLarge { .. } | E::DimensionTooLarge { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let threads = usize::from(cli.threads);
    let name = cli.command.name();
    let params = commands::params(&cli.command, threads);
    let start = Instant::now();
    let outcome = commands::execute(&cli.command, threads);
    let ctx = output::Context { command: name, wall_clock_ms: start.elapsed().as_millis() as u64, threads };

    match outcome {
        Ok(report) => match output::write_report(out, cli.format, &ctx, &params, &report) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "vrhq: writing output: {e}");
                EXIT_INPUT
            }
        },
        Err(f) => {
            let _ = writeln!(err, "vrhq {name}: {}", f.message);
            if cli.format == Format::Json {
                let _ = output::write_error(out, &ctx, &params, f.code, &f.message);
            }
            f.code
        }
    }
}
