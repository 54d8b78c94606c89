use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use phylocount::config::OutputFormat;
use phylocount::oracle::{
    check_cap, enumerate_semilabeled, oracle_equivalence, Partitions, RootedTree, SetPartition, PARTITION_CAP,
    TREE_VERTEX_CAP,
};
use serde::Serialize;

use crate::args::{Cli, OracleArgs};
use crate::output::{csv_writer, json_line};
use crate::{CmdResult, Failure};

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Dumped<'a> {
    Partition {
        #[serde(flatten)]
        partition: &'a SetPartition,
        singleton_free: bool,
    },
    Tree {
        n: u32,
        k: u32,
        phylogenetic: bool,
        tree: &'a RootedTree,
    },
}

fn dump(path: &Path, args: &OracleArgs, lift: bool) -> CmdResult {
    let mut file = BufWriter::new(File::create(path)?);
    for n in 1..=args.n {
        for p in Partitions::new(n) {
            json_line(&mut file, &Dumped::Partition { singleton_free: !p.has_singleton(), partition: &p })?;
        }
    }
    for n in 1..=args.trees {
        for k in 1..=n {
            for t in enumerate_semilabeled(n, k, lift)? {
                json_line(&mut file, &Dumped::Tree { n, k, phylogenetic: t.is_phylogenetic(), tree: &t })?;
            }
        }
    }
    file.flush()?;
    Ok(())
}

pub fn run(cli: &Cli, args: &OracleArgs, out: &mut dyn Write) -> CmdResult {
    let lift = cli.unsafe_sizes;
    check_cap("partition ground set", args.n as usize, PARTITION_CAP, lift)?;
    check_cap("non-root tree vertices", args.trees as usize, TREE_VERTEX_CAP, lift)?;
    let report = oracle_equivalence(args.n, args.trees, lift)?;
    match cli.format {
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["array", "n", "k", "oracle", "recurrence", "ok"])?;
            for c in &report.checks {
                w.write_record([
                    c.array,
                    &c.n.to_string(),
                    &c.k.to_string(),
                    &c.oracle.to_string(),
                    &c.recurrence,
                    &c.ok.to_string(),
                ])?;
            }
            w.flush()?;
        }
        OutputFormat::Json => json_line(out, &report)?,
        OutputFormat::Plain => {
            for c in report.failures() {
                writeln!(
                    out,
                    "FAIL {}({}, {}): enumerated {}, recurrence {}",
                    c.array, c.n, c.k, c.oracle, c.recurrence
                )?;
            }
            let status = if report.passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{status} oracle: {} entries checked (partitions n <= {}, trees with <= {} vertices)",
                report.checks.len(),
                args.n,
                args.trees
            )?;
        }
    }
    if let Some(path) = &args.dump {
        dump(path, args, lift)?;
    }
    if !report.passed {
        return Err(Failure::Check(format!("{} oracle mismatches", report.failures().count())));
    }
    Ok(())
}
