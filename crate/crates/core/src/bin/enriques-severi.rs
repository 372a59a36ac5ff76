use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use enriques_severi::cli::{self, GenusRange, Output};
use enriques_severi::error::CliError;
use enriques_severi::moduli::Filter;

#[derive(Parser)]
#[command(name = "enriques-severi", version, about = "Limit-curve verification for polarized Enriques surfaces")]
struct Args {
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum FilterArg {
    All,
    NonTwoDivisible,
}

#[derive(Copy, Clone, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

impl From<FormatArg> for cli::Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => cli::Format::Json,
            FormatArg::Tsv => cli::Format::Tsv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List moduli components by fundamental coefficients.
    Enumerate {
        #[arg(long, conflicts_with = "genus_range", required_unless_present = "genus_range")]
        genus: Option<i64>,
        /// Inclusive range A..B.
        #[arg(long)]
        genus_range: Option<GenusRange>,
        #[arg(long, value_enum, default_value = "all")]
        filter: FilterArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Validate a tuple a0,a1..a7,a9,a10,eps and classify its parity case.
    Classify { coeffs: String },
    /// Build and check the limit plan of a tuple a0,a1..a7,a9,a10,eps.
    Plan {
        coeffs: String,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Check every non-2-divisible component in a genus range.
    Verify {
        #[arg(long)]
        genus_range: GenusRange,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Intersect two classes on a model R(n), P(n) or E.
    ///
    /// Generators: s, f, eN on R(n); l, eN on P(n); EN and EI.J on E.
    Pair {
        #[arg(long)]
        model: String,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Check the frozen reference tables.
    Selftest,
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Enumerate {
            genus,
            genus_range,
            filter,
            format,
        } => {
            let range = match (genus, genus_range) {
                (Some(g), None) if g >= 2 => GenusRange::single(g),
                (None, Some(r)) => r,
                _ => return Err(CliError::Usage("give --genus G >= 2 or --genus-range A..B".to_string())),
            };
            let filter = match filter {
                FilterArg::All => Filter::All,
                FilterArg::NonTwoDivisible => Filter::NonTwoDivisible,
            };
            Ok(cli::cmd_enumerate(range, filter, format.into()))
        }
        Command::Classify { coeffs } => cli::cmd_classify(&coeffs),
        Command::Plan { coeffs, format } => cli::cmd_plan(&coeffs, format.into()),
        Command::Verify { genus_range, jobs } => cli::cmd_verify(genus_range, jobs),
        Command::Pair { model, lhs, rhs } => cli::cmd_pair(&model, &lhs, &rhs),
        Command::Selftest => Ok(cli::cmd_selftest()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(out) => {
            if let Some(path) = args.out {
                if let Err(e) = fs::write(&path, &out.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(cli::EXIT_USAGE as u8);
                }
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::EXIT_USAGE as u8)
        }
    }
}
