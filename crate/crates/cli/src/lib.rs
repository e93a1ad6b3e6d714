//! Command-line front end for the `polycensus` library.
//!
//! The binary is a thin wrapper around [`run`]; everything else lives here
//! so that tests can drive commands without spawning a process.

pub mod bench;
pub mod report;
pub mod sequence;
pub mod table;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polycensus::{CensusError, FixCountError, ModelError, OracleError, Symmetry};
use thiserror::Error;

use report::{CensusReport, Method, Query};
use sequence::{Family, SequenceSpec};
use table::{CensusTable, TableFormat};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    FixCount(#[from] FixCountError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Outcome of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    VerificationFailed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::VerificationFailed => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "polycensus",
    version,
    about = "Count integer polygons of a given perimeter"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count polygons (or m-gons) with perimeter n
    Count(CountArgs),
    /// Print the table of m-gon counts with its column sums
    Table(TableArgs),
    /// Write an OEIS-style b-file for a sequence
    Bfile(BfileArgs),
    /// Cross-check formulas against exhaustive enumeration
    Verify(VerifyArgs),
    /// Time one evaluation of p(n)
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub m: Option<u64>,
    /// Count up to rotation only
    #[arg(long)]
    pub cyclic: bool,
    /// One or more methods, comma separated; several are cross-checked
    #[arg(long, value_enum, value_delimiter = ',', default_value = "closed")]
    pub method: Vec<Method>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 20)]
    pub max_n: u64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct BfileArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub m: Option<u64>,
    /// First n (default: the family's smallest valid n)
    #[arg(long)]
    pub from: Option<u64>,
    #[arg(long)]
    pub to: u64,
    /// Index printed for the first term
    #[arg(long)]
    pub offset: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 14)]
    pub max_n: u64,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: OutputFormat,
    /// Add one to the closed-form p(M, N) before checking
    #[arg(long, value_name = "N,M", hide = true, value_parser = parse_pair)]
    pub inject_fault: Option<(u64, u64)>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: OutputFormat,
}

fn parse_pair(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once(',').ok_or("expected N,M")?;
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| e.to_string());
    Ok((parse(a)?, parse(b)?))
}

/// Runs one command, writing its normal output to `out`.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<Status, CliError> {
    match cli.command {
        Command::Count(args) => count(args, out),
        Command::Table(args) => {
            let table = CensusTable::compute(args.max_n)?;
            out.write_all(table.render(args.format).as_bytes())?;
            Ok(Status::Success)
        }
        Command::Bfile(args) => bfile(args, out),
        Command::Verify(args) => {
            let report = match args.inject_fault {
                Some((n, m)) => {
                    verify::run_with(&verify::Perturbed { n, m }, args.max_n, args.seed)?
                }
                None => verify::run(args.max_n, args.seed)?,
            };
            match args.format {
                OutputFormat::Plain => writeln!(out, "{}", report.summary())?,
                OutputFormat::Json => writeln!(out, "{}", report.to_json())?,
            }
            Ok(if report.passed {
                Status::Success
            } else {
                Status::VerificationFailed
            })
        }
        Command::Bench(args) => {
            let report = bench::run(args.n)?;
            match args.format {
                OutputFormat::Plain => writeln!(out, "{}", report.summary())?,
                OutputFormat::Json => {
                    let json = serde_json::to_string_pretty(&report).expect("report serialises");
                    writeln!(out, "{json}")?
                }
            }
            Ok(Status::Success)
        }
    }
}

fn count<W: Write>(args: CountArgs, out: &mut W) -> Result<Status, CliError> {
    let query = Query {
        n: args.n,
        m: args.m,
        symmetry: if args.cyclic {
            Symmetry::Cyclic
        } else {
            Symmetry::Dihedral
        },
    };
    let mut methods = args.method;
    methods.dedup();
    let report = CensusReport::run(query, &methods)?;
    match args.format {
        OutputFormat::Json => writeln!(out, "{}", report.to_json())?,
        OutputFormat::Plain if report.agrees() => writeln!(out, "{}", report.result)?,
        OutputFormat::Plain => {
            for r in &report.results {
                writeln!(out, "{:?}: {}", r.method, r.value)?;
            }
        }
    }
    Ok(if report.agrees() {
        Status::Success
    } else {
        Status::VerificationFailed
    })
}

fn bfile<W: Write>(args: BfileArgs, out: &mut W) -> Result<Status, CliError> {
    let spec = SequenceSpec::new(args.family, args.m, args.from, args.to, args.offset)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {:?} workers: {e}", args.jobs)))?;
    let terms = pool.install(|| spec.values())?;
    match &args.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            sequence::write_terms(&terms, &mut file)?;
            file.flush()?;
        }
        None => sequence::write_terms(&terms, out)?,
    }
    Ok(Status::Success)
}
