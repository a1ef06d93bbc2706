//! `aztec20v`: tables, refined polynomials, oracle counts and identity checks.
//!
//! Exit status: 0 when everything passes, 1 on an identity failure, 2 on a
//! usage or configuration error.

mod commands;
mod output;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use aztec20v_core::verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "aztec20v", version, about = "Exact 20V / domino-tiling enumeration and identity checks")]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report (or SVG) here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for independent items.
    #[arg(long, global = true, env = "AZTEC20V_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    #[value(name = "20v")]
    TwentyVertex,
    #[value(name = "dt")]
    Domino,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RefinedModel {
    #[value(name = "20v")]
    TwentyVertex,
    #[value(name = "dt")]
    Domino,
    #[value(name = "6v")]
    SixVertex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Totals over a range of sizes.
    Table {
        #[arg(long, value_enum)]
        model: Model,
        /// Truncation index k of the pentagon P_{n,k} / triangle T_{n,k}; omitted means k = n−1.
        #[arg(long)]
        pentagon: Option<usize>,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Coefficients of a refined generating polynomial, ascending.
    Refined {
        #[arg(long, value_enum)]
        model: RefinedModel,
        #[arg(long)]
        n: usize,
    },
    /// Run an identity suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        /// Largest size to check; families with their own ceilings stay capped.
        #[arg(long)]
        n_max: Option<usize>,
        /// Let conjecture-consistency failures set the exit status.
        #[arg(long)]
        strict_conjecture: bool,
    },
    /// Direct enumeration.
    Oracle {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: usize,
        /// Truncation index; defaults to k = n−1.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        refined: bool,
        /// Weight each horizontal step by a formal γ (dt only).
        #[arg(long)]
        gamma: bool,
        /// JSON boundary specification replacing the default (20v only).
        #[arg(long)]
        boundary: Option<PathBuf>,
    },
    /// Print the default DWBC3 boundary specification of P_{n,k} as JSON.
    Boundary {
        #[arg(long)]
        n: usize,
        /// Truncation index; defaults to k = n−1.
        #[arg(long)]
        k: Option<usize>,
    },
    /// SVG of one non-intersecting path family on the Aztec triangle T_n.
    Render {
        #[arg(long)]
        n: usize,
    },
}

/// A failure with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn config(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

impl From<aztec20v_core::Error> for Failure {
    fn from(e: aztec20v_core::Error) -> Failure {
        use aztec20v_core::Error as E;
        let code = match e {
            E::Precondition(_) | E::UnsupportedTruncation { .. } | E::OracleBound { .. } | E::Boundary(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
