//! `periodic`: command-line front end for `periodic-core`.
//!
//! Every subcommand prints a single JSON document on stdout. Exit codes:
//! 0 on success, 2 for usage and parse errors, 3 when a resource cap is hit.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use periodic_core::{PositiveInt, DEFAULT_MAX_ROWS};

use commands::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "periodic",
    version,
    about = "Reconstruct sums of periodic maps from their first |S| values"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectrum S(n_1, ..., n_k) and its size computed three ways.
    Spectrum {
        #[arg(required = true, value_name = "PERIOD")]
        periods: Vec<PositiveInt>,
    },
    /// Cyclotomic factors and the characteristic polynomial of the spectrum.
    Charpoly {
        #[arg(required = true, value_name = "PERIOD")]
        periods: Vec<PositiveInt>,
    },
    /// The universal coefficient table as JSON.
    Coeffs {
        #[arg(required = true, value_name = "PERIOD")]
        periods: Vec<PositiveInt>,
        /// Write the table here instead of stdout.
        #[arg(long, short)]
        out: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_ROWS)]
        max_rows: usize,
    },
    /// Value at x of the sum of periodic maps with the given initial values.
    Extrapolate(ExtrapolateArgs),
    /// Covering-function checks on a residue system.
    Cover(CoverArgs),
    /// Compare two periodic integer sequences on the m + n - gcd(m, n) window.
    Finewilf {
        /// First sequence, `v0,v1,...` or `v0,v1,...|period`.
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// Second sequence, same format.
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
}

#[derive(Debug, Args)]
pub(crate) struct ExtrapolateArgs {
    /// Periods of the components.
    #[arg(long, num_args = 1.., required_unless_present = "table", conflicts_with = "table")]
    periods: Vec<PositiveInt>,
    /// Load a table written by `coeffs` instead of building one.
    #[arg(long)]
    table: Option<std::path::PathBuf>,
    /// psi(0), ..., psi(|S| - 1). For --vec, each value is `c1,c2,...`,
    /// optionally wrapped in parentheses so a negative first component
    /// is not read as a flag.
    #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
    initial: Vec<String>,
    /// Argument x (any integer).
    #[arg(long, allow_negative_numbers = true)]
    at: BigInt,
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long, default_value_t = DEFAULT_MAX_ROWS)]
    max_rows: usize,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub(crate) struct GroupArgs {
    /// Values are integers (default).
    #[arg(long)]
    int: bool,
    /// Values are integers mod M.
    #[arg(long = "mod", value_name = "M")]
    modulus: Option<PositiveInt>,
    /// Values are integer vectors of dimension D.
    #[arg(long = "vec", value_name = "D")]
    dim: Option<usize>,
}

#[derive(Debug, Args)]
pub(crate) struct CoverArgs {
    /// File with one `a mod n` per line or a JSON array `[[a, n], ...]`; `-` reads stdin.
    input: Option<std::path::PathBuf>,
    /// Inline class `a mod n`; may repeat.
    #[arg(long = "class", value_name = "CLASS", allow_hyphen_values = true)]
    classes: Vec<String>,
    /// Check the window against residue class `a (mod m)`: modulus m.
    #[arg(long, default_value = "2", conflicts_with = "odd")]
    modulus: PositiveInt,
    /// Residue a for the class check.
    #[arg(
        long,
        default_value = "1",
        allow_hyphen_values = true,
        conflicts_with = "odd"
    )]
    residue: BigInt,
    /// Odd-cover test, same as `--modulus 2 --residue 1`.
    #[arg(long)]
    odd: bool,
    /// First integer of the window.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    start: BigInt,
    /// Evaluate gcd(w(a) + b, ..., w(a + |S| - 1) + b).
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
    gcd_window: Option<Vec<BigInt>>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spectrum { periods } => commands::spectrum(periods),
        Command::Charpoly { periods } => commands::charpoly(periods),
        Command::Coeffs {
            periods,
            out,
            max_rows,
        } => commands::coeffs(periods, out.as_deref(), max_rows),
        Command::Extrapolate(args) => commands::extrapolate(args),
        Command::Cover(args) => commands::cover(args),
        Command::Finewilf { g, h } => commands::finewilf(&g, &h),
    };
    match result {
        Ok(output) => {
            // a closed pipe downstream is not our failure
            let _ = writeln!(std::io::stdout().lock(), "{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(err) => write!(f, "{err}"),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}
