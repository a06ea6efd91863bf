mod commands;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bicrank_core::DEFAULT_PRECISION;

#[derive(Parser, Debug)]
#[command(
    name = "bicrank",
    version,
    about = "Reproducible checks on bicrank class counts of 2-colored partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. `list` is only accepted by `expand`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Working precision in bits for real-valued quantities.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a generating function to a given order.
    Expand {
        #[arg(value_enum)]
        what: Expansion,
        #[arg(long, default_value_t = 20)]
        order: usize,
        /// Class modulus for `classes`.
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Run one of the verification suites.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        /// Order (or index bound) of the check; defaults per suite.
        #[arg(long)]
        order: Option<usize>,
        /// Index range for the asymptotic suites.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        range: Option<Vec<u64>>,
    },
    /// Scan for the index from which the main term dominates the error bound.
    Threshold {
        #[arg(long)]
        modulus: u32,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], required = true)]
        range: Vec<u64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    List,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expansion {
    P2,
    Diff2,
    Diff3,
    Diff4,
    Table,
    Classes,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    T1,
    T2,
    T4,
    Mod5,
    Identities,
    Asy3,
    Asy5,
}

/// Everything that determines a run; echoed into JSON reports.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub target: String,
    pub order: Option<usize>,
    pub modulus: Option<u64>,
    pub precision: u32,
    pub range: Option<(u64, u64)>,
    pub format: Format,
}

fn range_pair(range: Option<Vec<u64>>) -> anyhow::Result<Option<(u64, u64)>> {
    match range.as_deref() {
        None => Ok(None),
        Some(&[lo, hi]) if lo <= hi => Ok(Some((lo, hi))),
        Some(&[lo, hi]) => bail!("range is empty: {lo} > {hi}"),
        Some(_) => bail!("--range takes exactly two values"),
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if cli.precision < 64 {
        bail!("--precision must be at least 64 bits");
    }
    let format = cli.format;
    let outcome = match cli.command {
        Command::Expand {
            what,
            order,
            modulus,
        } => {
            let config = RunConfig {
                command: "expand".into(),
                target: commands::name_of(&what),
                order: Some(order),
                modulus,
                precision: cli.precision,
                range: None,
                format: format.unwrap_or(Format::List),
            };
            commands::expand(what, config)?
        }
        Command::Verify {
            theorem,
            order,
            range,
        } => {
            if format == Some(Format::List) {
                bail!("the list format is only available for expand");
            }
            let config = RunConfig {
                command: "verify".into(),
                target: commands::name_of(&theorem),
                order,
                modulus: None,
                precision: cli.precision,
                range: range_pair(range)?,
                format: format.unwrap_or(Format::Csv),
            };
            commands::verify(theorem, config)?
        }
        Command::Threshold { modulus, range } => {
            if format == Some(Format::List) {
                bail!("the list format is only available for expand");
            }
            let config = RunConfig {
                command: "threshold".into(),
                target: format!("mod{modulus}"),
                order: None,
                modulus: Some(modulus as u64),
                precision: cli.precision,
                range: range_pair(Some(range))?,
                format: format.unwrap_or(Format::Csv),
            };
            commands::threshold(modulus, config)?
        }
    };

    match &cli.output {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("cannot write {}", path.display()))?;
            let mut w = BufWriter::new(file);
            outcome.write(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            outcome.write(&mut w)?;
            w.flush()?;
        }
    }
    outcome.write_summary(&mut io::stderr().lock())?;
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
