//! `regmod`: JSON in, JSON reports out.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Seed used by every randomized splitting routine unless `--seed` is given.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Parser, Debug)]
#[command(name = "regmod", version, about = "Regular orbits, regular modules and character-table checks")]
pub struct Cli {
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Omit timings so identical inputs give byte-identical reports.
    #[arg(long, global = true)]
    pub stable: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Assemble a PRA scenario, check hypotheses (a)-(d) and optionally the conclusion.
    Scenario {
        path: PathBuf,
        /// Check the hypotheses only (default).
        #[arg(long, conflicts_with = "run")]
        validate: bool,
        /// Also check every character faithful on P.
        #[arg(long)]
        run: bool,
        /// Run the character check even when hypotheses fail.
        #[arg(long, requires = "run")]
        force: bool,
    },
    /// Scan the rank-two elementary abelian counterexample module.
    Remark {
        #[arg(long)]
        p: u64,
    },
    /// Check the B × C splitting hypotheses on a module and build a regular vector.
    Dade { path: PathBuf },
    /// Character table of a group given by generators.
    Chartab {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = commands::run(&cli);
    ExitCode::from(code as u8)
}
