use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use projineq_cli::fuzz::FuzzConfig;
use projineq_cli::{commands, input, resolve_tolerance, CliError, EXIT_VIOLATION};

/// Projection-based refinements of classical inner-product inequalities:
/// evaluate bound chains on explicit vectors, Walker/Sharpe and Hölder
/// reports on sample data, and run the seeded verification harness.
#[derive(Parser)]
#[command(name = "projineq", version, about)]
struct Cli {
    /// Relative tolerance for inequality checks; overrides PROJINEQ_TOLERANCE
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Evaluate the bound chain and inequality witnesses for a JSON instance
    Bounds {
        /// JSON document with vectors x, y and a spanning set or direction z
        #[arg(long)]
        input: PathBuf,
        /// Write the machine-readable report to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Walker chain, Sharpe ratios and the equalization test on CSV columns
    Walker {
        /// CSV file with a header row, one observation per row
        #[arg(long)]
        csv: PathBuf,
        /// Two column names, comma separated (a column may repeat)
        #[arg(long)]
        cols: String,
        /// Optional weight column; the equal-weight measure otherwise
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Refined Hölder report on CSV columns
    Hoelder {
        #[arg(long)]
        csv: PathBuf,
        /// Two column names, comma separated
        #[arg(long)]
        cols: String,
        /// Hölder exponent p > 1; q = p/(p-1)
        #[arg(long)]
        p: f64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the seeded randomized verification harness
    Fuzz(FuzzArgs),
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instances generated per property family
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 16)]
    max_dim: usize,
    #[arg(long, default_value_t = 64)]
    max_outcomes: usize,
    /// Lower end of the value range for generated coordinates and samples
    #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
    value_min: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    value_max: f64,
    #[arg(long)]
    json: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let tolerance = resolve_tolerance(cli.tolerance)?;
    match cli.command {
        Commands::Bounds { input, json } => {
            commands::cmd_bounds(&input, json.as_deref(), tolerance)?;
            Ok(true)
        }
        Commands::Walker {
            csv,
            cols,
            weights,
            json,
        } => {
            let columns = input::parse_columns(&cols)?;
            commands::cmd_walker(&csv, &columns, weights.as_deref(), json.as_deref(), tolerance)?;
            Ok(true)
        }
        Commands::Hoelder { csv, cols, p, json } => {
            let columns = input::parse_columns(&cols)?;
            commands::cmd_hoelder(&csv, &columns, p, json.as_deref(), tolerance)?;
            Ok(true)
        }
        Commands::Fuzz(args) => {
            let degenerate_range = args.value_min.is_nan()
                || args.value_max.is_nan()
                || args.value_min >= args.value_max;
            if degenerate_range {
                return Err(CliError::Input(format!(
                    "empty value range [{}, {}]",
                    args.value_min, args.value_max
                )));
            }
            let config = FuzzConfig {
                seed: args.seed,
                trials: args.trials,
                max_dim: args.max_dim.max(1),
                max_outcomes: args.max_outcomes.max(1),
                value_range: (args.value_min, args.value_max),
                tolerance,
            };
            let report = commands::cmd_fuzz(&config, args.json.as_deref())?;
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VIOLATION as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
