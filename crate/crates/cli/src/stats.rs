use std::io::Write;

use phylocount::config::OutputFormat;
use phylocount::dist_stats::{stats_report_of_row, StatsReport};
use phylocount::numeric::{float_string, rational_string};

use crate::args::{Cli, FamilyRange};
use crate::output::{csv_writer, json_line};
use crate::table::{rows, Indexing};
use crate::CmdResult;

const HEADER: [&str; 11] = [
    "family",
    "n",
    "mean",
    "variance",
    "mean_f",
    "var_f",
    "sup_cdf_distance",
    "llt_value_at_mode",
    "mode_index",
    "mode_offset",
    "mode_tied",
];

fn csv_record(r: &StatsReport) -> [String; 11] {
    let s = &r.stats;
    let l = r.limits.as_ref();
    let opt = |f: &dyn Fn(&phylocount::dist_stats::LimitReport) -> String| l.map(f).unwrap_or_default();
    [
        s.family.to_string(),
        s.n.to_string(),
        rational_string(&s.mean),
        rational_string(&s.variance),
        float_string(s.mean_f),
        float_string(s.var_f),
        opt(&|l| float_string(l.sup_cdf_distance)),
        opt(&|l| float_string(l.llt_value_at_mode)),
        opt(&|l| l.mode_index.to_string()),
        opt(&|l| float_string(l.mode_offset)),
        opt(&|l| l.mode_tied.to_string()),
    ]
}

fn plain_line(out: &mut dyn Write, r: &StatsReport) -> CmdResult {
    let s = &r.stats;
    write!(
        out,
        "{} n={} mean={} ({}) variance={} ({})",
        s.family,
        s.n,
        rational_string(&s.mean),
        float_string(s.mean_f),
        rational_string(&s.variance),
        float_string(s.var_f)
    )?;
    if let Some(l) = &r.limits {
        write!(
            out,
            " sup_cdf={} llt={} mode={}{} offset={}",
            float_string(l.sup_cdf_distance),
            float_string(l.llt_value_at_mode),
            l.mode_index,
            if l.mode_tied { " (tied)" } else { "" },
            float_string(l.mode_offset)
        )?;
    }
    writeln!(out)?;
    Ok(())
}

pub fn run(cli: &Cli, args: &FamilyRange, out: &mut dyn Write) -> CmdResult {
    // Empty rows have no distribution; a single requested empty row is an error.
    let single = args.n.len() == 1;
    let mut reports = rows(args.family, args.n, Indexing::Distribution, cli.cache.as_deref())?
        .filter(|row| single || !row.is_empty())
        .map(|row| stats_report_of_row(args.family, &row));
    match cli.format {
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(HEADER)?;
            for r in reports.by_ref() {
                w.write_record(csv_record(&r?))?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            for r in reports.by_ref() {
                json_line(out, &r?)?;
            }
        }
        OutputFormat::Plain => {
            for r in reports.by_ref() {
                plain_line(out, &r?)?;
            }
        }
    }
    Ok(())
}
