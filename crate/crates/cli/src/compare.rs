use std::io::Write;

use phylocount::asympt::{compare, Comparison};
use phylocount::config::OutputFormat;

use crate::args::{Cli, FamilyRange};
use crate::output::{csv_writer, json_line};
use crate::table::{check_range, Indexing};
use crate::CmdResult;

/// CSV unless JSON lines are requested. Rows below the smallest index an
/// estimate is defined for are skipped.
pub fn run(cli: &Cli, args: &FamilyRange, out: &mut dyn Write) -> CmdResult {
    check_range(args.family, args.n, Indexing::Distribution)?;
    let rows = args.n.iter().map(|n| compare(args.family, n));
    if cli.format == OutputFormat::Json {
        for batch in rows {
            for c in batch? {
                json_line(out, &c)?;
            }
        }
        return Ok(());
    }
    let mut w = csv_writer(out);
    w.write_record(Comparison::csv_header())?;
    for batch in rows {
        for c in batch? {
            w.write_record(c.csv_record())?;
        }
    }
    w.flush()?;
    Ok(())
}
