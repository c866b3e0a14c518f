//! The `palin` command line.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 for usage
//! and validation errors. Flags fall back to `PALIN_*` environment
//! variables, then to built-in defaults.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod grid;

use grid::{Format, Mode};
use palindensity::oracle::{DEFAULT_ENUMERATION_CAP, DEFAULT_PARTITION_CAP};
use palindensity::{Parity, SamplingModel};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Mismatch(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) | CliError::Io { .. } => 2,
        }
    }
}

impl From<palindensity::Error> for CliError {
    fn from(e: palindensity::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "palin", version, about = "Palindromic density of multiset spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn parse_parity(s: &str) -> Result<Parity, String> {
    match s {
        "even" => Ok(Parity::Even),
        "odd" => Ok(Parity::Odd),
        other => Err(format!("unknown parity {other:?} (expected even or odd)")),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact density of one space
    Pd {
        n: u64,
        b: u64,
        /// Closed form in exact arithmetic (default)
        #[arg(long, conflicts_with = "float")]
        exact: bool,
        /// Product form in f64
        #[arg(long)]
        float: bool,
    },
    /// Cross-check closed forms against brute-force enumeration
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: u64,
        #[arg(long, default_value_t = 6)]
        max_b: u64,
        /// Largest space the oracle may enumerate
        #[arg(long, env = "PALIN_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Density surface over an (n, b) grid
    Grid {
        n_min: u64,
        n_max: u64,
        b_min: u64,
        b_max: u64,
        #[arg(long, env = "PALIN_MODE", default_value = "exact")]
        mode: Mode,
        #[arg(long, env = "PALIN_FORMAT", default_value = "csv")]
        format: Format,
        /// Output file (default stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Density, step ratio and distance to the limit as n grows
    Converge {
        b: u64,
        #[arg(long, default_value = "even", value_parser = parse_parity)]
        parity: Parity,
        #[arg(long, default_value_t = 50)]
        k_max: u64,
    },
    /// Multiplicity classes of one space
    Profiles {
        n: u64,
        b: u64,
        /// Largest n for partition enumeration
        #[arg(long, env = "PALIN_PARTITION_CAP", default_value_t = DEFAULT_PARTITION_CAP)]
        cap: u64,
    },
    /// Monte Carlo density estimate
    Sample {
        n: u64,
        b: u64,
        #[arg(long, env = "PALIN_MODEL", default_value = "uniform-multiset")]
        model: SamplingModel,
        #[arg(long, env = "PALIN_DRAWS", default_value_t = 100_000)]
        draws: u64,
        #[arg(long, env = "PALIN_SEED", default_value_t = 0)]
        seed: u64,
    },
}

/// Runs one command, writing its report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Pd { n, b, float, .. } => commands::pd(out, n, b, float),
        Command::Verify { max_n, max_b, cap } => commands::verify(out, max_n, max_b, cap),
        Command::Grid {
            n_min,
            n_max,
            b_min,
            b_max,
            mode,
            format,
            out: path,
        } => {
            let spec = grid::GridSpec {
                n_min,
                n_max,
                b_min,
                b_max,
                mode,
                format,
            };
            commands::grid(out, &spec, path.as_deref())
        }
        Command::Converge { b, parity, k_max } => commands::converge(out, b, parity, k_max),
        Command::Profiles { n, b, cap } => commands::profiles(out, n, b, cap),
        Command::Sample {
            n,
            b,
            model,
            draws,
            seed,
        } => commands::sample(out, n, b, model, draws, seed),
    }
}
