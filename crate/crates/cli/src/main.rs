//! `operad-pbw`: Gröbner bases, Koszul duals, series tests and enveloping
//! algebras for binary operads.
//!
//! Exit status: 0 success or PBW proven, 1 bad input, 2 uncertified or not
//! verified, 3 refuted, 4 inconclusive.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod load;
mod render;

#[derive(Parser)]
#[command(name = "operad-pbw", version, about = "Groebner bases and PBW tests for operads")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Pathlex,
    PathOppDeglex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Monomial order; overrides the order stored in the input.
    #[arg(long, global = true, value_enum)]
    pub order: Option<OrderArg>,
    /// Generators from largest to smallest, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub gen_order: Vec<String>,
    #[arg(long, global = true, default_value_t = 5)]
    pub max_arity: usize,
    /// Truncation degree for generating series.
    #[arg(long, global = true, default_value_t = 6)]
    pub trunc: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Output file. For `gb` and `dual` it receives the computed basis or
    /// presentation; otherwise the report.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Wall-clock budget for Gröbner completion.
    #[arg(long, global = true)]
    pub budget_seconds: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Complete a presentation to a Gröbner basis and count normal monomials.
    Gb { input: PathBuf },
    /// Check that a basis (or the relations of a presentation) is confluent.
    Verify { input: PathBuf },
    /// Decide the PBW property by every available route.
    Pbw {
        input: PathBuf,
        /// An algebra to test as a counterexample.
        #[arg(long)]
        algebra: Option<PathBuf>,
        /// Word length for the enveloping algebra comparison.
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Generating series and the necessary positivity condition.
    Series {
        #[command(subcommand)]
        action: SeriesCmd,
    },
    /// Quadratic Koszul dual of a binary quadratic presentation.
    Dual { input: PathBuf },
    /// Enveloping algebras of concrete algebras.
    Uea {
        #[command(subcommand)]
        action: UeaCmd,
    },
    /// Dimensions of the operad by arity.
    Dims { input: PathBuf },
}

#[derive(Subcommand)]
pub enum SeriesCmd {
    /// Apply the positivity test to the series of a Koszul dual.
    Necessary {
        /// Named series of the dual operad.
        #[arg(long, conflicts_with = "input")]
        dual: Option<String>,
        /// Series file.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Use characters instead of exponential generating series.
        #[arg(long)]
        character: bool,
    },
    /// Print a named series.
    Show {
        name: String,
        #[arg(long)]
        character: bool,
    },
}

#[derive(Subcommand)]
pub enum UeaCmd {
    /// Print the presentation of the enveloping algebra.
    Build { presentation: PathBuf, algebra: PathBuf },
    /// Compare filtered dimensions with those of the trivial algebra.
    Compare {
        presentation: PathBuf,
        algebra: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
}

/// What a command produced: exit status plus text and JSON renderings.
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: String,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }

    pub fn incomplete(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let c = &cli.common;
    match cli.command {
        Command::Gb { input } => commands::gb(c, &input),
        Command::Verify { input } => commands::verify(c, &input),
        Command::Pbw { input, algebra, depth } => commands::pbw(c, &input, algebra.as_deref(), depth),
        Command::Series { action } => commands::series(c, action),
        Command::Dual { input } => commands::dual(c, &input),
        Command::Uea { action } => commands::uea(c, action),
        Command::Dims { input } => commands::dims(c, &input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.common.format;
    let report_to_file = cli.common.out.clone().filter(|_| !commands::out_is_payload(&cli.command));
    match run(cli) {
        Ok(out) => {
            let body = match format {
                Format::Text => out.text,
                Format::Json => out.json,
            };
            let written = match report_to_file {
                Some(path) => std::fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display())),
                None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
