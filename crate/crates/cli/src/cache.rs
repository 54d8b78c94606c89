use std::fs;
use std::io::Write;

use phylocount::bigcount::{
    first_mismatch, load_triangle, parse_cache, save_triangle, triangle_from_records, TriangleFamily,
};

use phylocount::config::NRange;

use crate::args::{CacheAction, CacheArgs, Cli};
use crate::table::{check_range, Indexing};
use crate::{CmdResult, Failure};

pub fn run(cli: &Cli, args: &CacheArgs, out: &mut dyn Write) -> CmdResult {
    let path = cli.cache.as_deref().ok_or_else(|| Failure::Usage("cache commands need --cache PATH".into()))?;
    match &args.action {
        CacheAction::Build { family, n } => {
            check_range(*family, NRange::single(*n), Indexing::Table)?;
            let mut tri = load_triangle(path, family.triangle())?;
            let last = Indexing::Table.triangle_index(*family, *n);
            tri.extend_to(last);
            save_triangle(path, &tri)?;
            writeln!(out, "stored {} rows of {} in {}", tri.rows().len(), family.triangle().tag(), path.display())?;
            Ok(())
        }
        CacheAction::Check => {
            let text = fs::read_to_string(path)?;
            let records = parse_cache(&text)?;
            let mut bad = Vec::new();
            for family in TriangleFamily::ALL {
                let tri = triangle_from_records(family, &records)?;
                let Some(max) = tri.max_row() else { continue };
                match first_mismatch(&tri) {
                    Some(n) => {
                        writeln!(out, "FAIL {}: row {n} disagrees with the recurrence", family.tag())?;
                        bad.push(format!("{} row {n}", family.tag()));
                    }
                    None => writeln!(out, "PASS {}: rows {}..{max}", family.tag(), family.first_row())?,
                }
            }
            if bad.is_empty() {
                Ok(())
            } else {
                Err(Failure::Check(format!("stale cache rows: {}", bad.join(", "))))
            }
        }
    }
}
