//! `twocell`: inspect weighted presentations, run criteria, and compute subgroup data.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "twocell", version, about = "Weighted perimeter reduction for 2-complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Perimeters, weights, periods and small cancellation data.
    Info {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run one criterion (or `all`) and print the verdict as JSON.
    Check {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        criterion: String,
        /// Comma-separated generators spanning a Magnus subgraph.
        #[arg(long)]
        magnus: Option<String>,
    },
    /// A presentation of the subgroup generated by `--gens`.
    Subgroup {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Whether `--word` lies in the subgroup generated by `--gens`.
    Member {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// A presentation of `⟨--gens⟩ ∩ ⟨--with⟩`, or of `⟨--gens⟩ ∩ π₁M` with `--magnus`.
    Intersect {
        file: PathBuf,
        #[arg(long = "with", allow_hyphen_values = true, required_unless_present = "magnus")]
        other: Option<String>,
        #[arg(long, conflicts_with = "other")]
        magnus: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    /// Comma-separated words, or `@name` for a `words` list in the file.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    gens: String,
    /// Run without a certificate; the answer is then marked heuristic.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    step_limit: Option<usize>,
    #[arg(long)]
    json: bool,
    /// Write the reduction trace here.
    #[arg(long)]
    trace: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
