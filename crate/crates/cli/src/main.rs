//! `phylocount`: tables, statistics, asymptotic comparisons and
//! verification suites for partition and tree counts.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
//! usage error.

mod args;
mod cache;
mod compare;
mod oracle;
mod output;
mod stats;
mod table;
mod verify;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or inputs outside a supported domain.
    Usage(String),
    /// A check ran and failed.
    Check(String),
}

impl From<phylocount::Error> for Failure {
    fn from(e: phylocount::Error) -> Self {
        use phylocount::Error as E;
        match e {
            E::Cache { .. } | E::RootIsolation(_) | E::DegenerateVariance => Failure::Check(e.to_string()),
            E::Domain(_) | E::SizeCap { .. } | E::Parse(_) | E::Io(_) => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(format!("csv error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("json error: {e}"))
    }
}

pub type CmdResult = Result<(), Failure>;

fn run(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Table(a) => table::run(cli, a, out),
        Command::Stats(a) => stats::run(cli, a, out),
        Command::Compare(a) => compare::run(cli, a, out),
        Command::Verify(a) => verify::run(cli, a, out),
        Command::Oracle(a) => oracle::run(cli, a, out),
        Command::Cache(a) => cache::run(cli, a, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Check(msg)), _) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
