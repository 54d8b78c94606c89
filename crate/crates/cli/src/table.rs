use std::io::Write;
use std::path::Path;

use phylocount::bigcount::{load_triangle, save_triangle, Row};
use phylocount::config::{NRange, OutputFormat};
use phylocount::dist_stats::Family;
use serde::Serialize;

use crate::args::{Cli, FamilyRange};
use crate::output::{csv_writer, joined, json_line};
use crate::{CmdResult, Failure};

#[derive(Serialize)]
struct RowRecord {
    family: Family,
    n: u32,
    k_min: u32,
    row: Vec<String>,
    sum: String,
}

impl RowRecord {
    fn new(family: Family, row: &Row) -> Self {
        RowRecord {
            family,
            n: row.n,
            k_min: row.k_min,
            row: row.values.iter().map(ToString::to_string).collect(),
            sum: row.sum().to_string(),
        }
    }
}

/// How row indices are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Indexing {
    /// Counting arrays: `T` rows are labeled by their number of leaves.
    Table,
    /// Row distributions: `T` row `n` is the tree polynomial `P_n`.
    Distribution,
}

impl Indexing {
    pub fn first(self, family: Family) -> u32 {
        match (self, family) {
            (Indexing::Table, Family::T) => family.triangle().first_row(),
            _ => family.first_index(),
        }
    }

    pub fn triangle_index(self, family: Family, n: u32) -> u32 {
        match (self, family) {
            (Indexing::Table, Family::T) => n,
            _ => family.triangle_index(n),
        }
    }

    fn view(self, family: Family, row: Row) -> Row {
        match (self, family) {
            (Indexing::Table, Family::T) => row,
            _ => family.view(row),
        }
    }
}

pub fn check_range(family: Family, range: NRange, indexing: Indexing) -> Result<(), Failure> {
    let first = indexing.first(family);
    if range.lo < first {
        return Err(Failure::Usage(format!("{family} rows start at n = {first}")));
    }
    Ok(())
}

/// Rows `range` of `family`, served from the cache file when one is given.
/// Missing rows are computed and the cache is extended.
pub fn rows(
    family: Family,
    range: NRange,
    indexing: Indexing,
    cache: Option<&Path>,
) -> Result<Box<dyn Iterator<Item = Row>>, Failure> {
    check_range(family, range, indexing)?;
    let tri_family = family.triangle();
    let first = indexing.triangle_index(family, range.lo);
    let last = indexing.triangle_index(family, range.hi);
    let Some(path) = cache else {
        let stream = tri_family.rows().skip((first - tri_family.first_row()) as usize);
        return Ok(Box::new(stream.take(range.len() as usize).map(move |r| indexing.view(family, r))));
    };
    let mut tri = load_triangle(path, tri_family)?;
    if tri.max_row().is_none_or(|m| m < last) {
        tri.extend_to(last);
        save_triangle(path, &tri)?;
    }
    let mut selected = Vec::with_capacity(range.len() as usize);
    for n in first..=last {
        selected.push(indexing.view(family, tri.row(n)?.clone()));
    }
    Ok(Box::new(selected.into_iter()))
}

pub fn run(cli: &Cli, args: &FamilyRange, out: &mut dyn Write) -> CmdResult {
    let records =
        rows(args.family, args.n, Indexing::Table, cli.cache.as_deref())?.map(|row| RowRecord::new(args.family, &row));
    match cli.format {
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["family", "n", "k_min", "row", "sum"])?;
            for r in records {
                w.write_record([r.family.to_string(), r.n.to_string(), r.k_min.to_string(), joined(&r.row), r.sum])?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            for r in records {
                json_line(out, &r)?;
            }
        }
        OutputFormat::Plain => {
            for r in records {
                if r.row.is_empty() {
                    writeln!(out, "{} n={}: empty (sum 0)", r.family, r.n)?;
                } else {
                    let k_max = r.k_min as usize + r.row.len() - 1;
                    writeln!(
                        out,
                        "{} n={} k={}..{}: {} (sum {})",
                        r.family,
                        r.n,
                        r.k_min,
                        k_max,
                        joined(&r.row),
                        r.sum
                    )?;
                }
            }
        }
    }
    Ok(())
}
