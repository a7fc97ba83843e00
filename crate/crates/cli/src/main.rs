//! `wgrass`: exact computations for weighted Grassmannians from the shell.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "wgrass", version, about = "Gradings, lattices and Hilbert series of weighted Grassmannians")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Highest series coefficient to compute.
    #[arg(long, global = true, default_value_t = 20)]
    order: usize,
    /// Largest `(n+1)!` the Hilbert formula paths may enumerate; also lifts
    /// the order limit of the standard-monomial oracle.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct GradingArgs {
    /// `n`, inferred from the length of `-a` when omitted.
    #[arg(short, long)]
    n: Option<usize>,
    #[arg(short, long)]
    k: usize,
    /// Comma-separated `a_0, …, a_n`.
    #[arg(short, long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    a: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Weyl,
    Oracle,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degrees of all Plücker coordinates.
    Degrees(GradingArgs),
    /// Degrees of the dualising sheaves.
    Canonical(GradingArgs),
    /// Hilbert series and its Hilbert-Serre numerator.
    Hilbert {
        #[command(flatten)]
        grading: GradingArgs,
        /// Defaults to `all` for n ≤ 4 and `closed` otherwise.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Coweight lattice of a representation in Hermite normal form.
    Lattice {
        #[arg(long = "type")]
        group_type: String,
        #[arg(long)]
        rank: usize,
        /// Exterior power `k`, or `standard`.
        #[arg(long)]
        fundamental: String,
    },
    /// Plücker relations, with their degrees.
    Relations {
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(short, long)]
        k: usize,
        #[arg(short, long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Option<Vec<i64>>,
    },
    /// Converts between `a` and the `GL(n+1) × G_m` parameters `(w, u)`.
    Convert {
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(short, long)]
        k: usize,
        #[arg(long, conflicts_with = "to_gl", requires_all = ["w", "u"])]
        from_gl: bool,
        #[arg(long, requires = "a")]
        to_gl: bool,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        w: Option<Vec<i64>>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<i64>,
        #[arg(short, long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Option<Vec<i64>>,
    },
    /// Action of a permutation of `0..=n` on the grading parameters.
    Weyl {
        #[command(flatten)]
        grading: GradingArgs,
        /// One-line notation, 0-indexed.
        #[arg(long, value_delimiter = ',', required = true)]
        perm: Vec<usize>,
    },
    /// Coordinates grouped by the primes dividing their degrees.
    Strata(GradingArgs),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    NotPositive(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::NotPositive(_) => 3,
            CliError::CrossCheck(_) => 4,
            CliError::Budget(_) => 5,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
