use std::io::Write;

use phylocount::bigcount::{
    bell, bell_star, bell_star_alternating, schroeder_t, tree_count_t, tree_count_via_partition, TriangleFamily,
};
use phylocount::config::{NRange, OutputFormat, Width};
use phylocount::dist_stats::{limit_report, Family};
use phylocount::genpoly::{check_newton, check_slc, verify_interlacing_range, verify_tree_roots_range, PolyRoots};
use serde::Serialize;
use serde_json::json;

use crate::args::{Cli, Suite, VerifyArgs};
use crate::output::{csv_writer, json_line};
use crate::{CmdResult, Failure};

/// Largest `|J_n - E| / D` accepted at the end of a `limits` range.
pub const MODE_OFFSET_LIMIT: f64 = 0.5;

#[derive(Debug, Serialize)]
struct Check {
    suite: &'static str,
    name: String,
    n: u32,
    passed: bool,
    failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<serde_json::Value>,
    #[serde(skip)]
    roots: Vec<PolyRoots>,
}

impl Check {
    fn new(suite: &'static str, name: impl Into<String>, n: u32, failure: Option<String>) -> Self {
        Check { suite, name: name.into(), n, passed: failure.is_none(), failure, detail: None, roots: Vec::new() }
    }
}

fn roots(range: NRange, width: &Width) -> Result<Vec<Check>, Failure> {
    let width = width.value();
    let mut checks = Vec::new();
    for r in verify_tree_roots_range(range.lo.max(1), range.hi.max(1), width)? {
        let mut c = Check::new("roots", "tree-roots", r.n, r.failure);
        c.detail = Some(json!({ "polynomials": [&r.polynomial] }));
        c.roots = vec![r.polynomial];
        checks.push(c);
    }
    if range.hi >= 2 {
        for r in verify_interlacing_range(range.lo.max(2), range.hi, width)? {
            let mut c = Check::new("roots", "interlacing", r.n, r.failure);
            c.detail = Some(json!({ "polynomials": &r.polynomials }));
            c.roots = r.polynomials;
            checks.push(c);
        }
    }
    Ok(checks)
}

fn slc(range: NRange) -> Vec<Check> {
    let mut checks = Vec::new();
    for tri in TriangleFamily::ALL {
        let lo = range.lo.max(tri.first_row());
        if lo > range.hi {
            continue;
        }
        for row in tri.rows().skip((lo - tri.first_row()) as usize).take((range.hi - lo + 1) as usize) {
            let failure =
                check_slc(&row).err().map(|f| format!("not strictly log-concave at k = {}: {}", f.k, f.detail));
            checks.push(Check::new("slc", format!("{}-slc", tri.tag()), row.n, failure));
            // Every row polynomial is x times a real-rooted polynomial whose
            // coefficients are the row entries.
            let failure = check_newton(&row.values, row.values.len())
                .err()
                .map(|f| format!("Newton inequality fails at k = {}: {}", f.k, f.detail));
            checks.push(Check::new("slc", format!("{}-newton", tri.tag()), row.n, failure));
        }
    }
    checks
}

fn limits(range: NRange, family: Option<Family>) -> Result<Vec<Check>, Failure> {
    if range.lo >= range.hi {
        return Err(Failure::Usage("the limits suite compares two rows; give a range A..B with A < B".into()));
    }
    let families = match family {
        Some(f) => vec![f],
        None => vec![Family::S, Family::SStar, Family::T],
    };
    let mut checks = Vec::new();
    for f in families {
        let a = limit_report(f, range.lo)?;
        let b = limit_report(f, range.hi)?;
        let detail = json!({ "from": &a, "to": &b });
        let decreasing = |name: &str, x: f64, y: f64| {
            let failure = (y >= x)
                .then(|| format!("{name} {y:.6e} at n = {} is not below {x:.6e} at n = {}", range.hi, range.lo));
            let mut c = Check::new("limits", format!("{f}-{name}"), range.hi, failure);
            c.detail = Some(detail.clone());
            c
        };
        checks.push(decreasing("sup-cdf", a.sup_cdf_distance, b.sup_cdf_distance));
        checks.push(decreasing("llt-error", a.llt_error(), b.llt_error()));
        let offset = b.mode_offset.abs();
        let failure = (offset >= MODE_OFFSET_LIMIT).then(|| format!("|J - E| / D = {offset:.6} at n = {}", range.hi));
        let mut c = Check::new("limits", format!("{f}-mode-offset"), range.hi, failure);
        c.detail = Some(detail);
        checks.push(c);
    }
    Ok(checks)
}

fn mismatch<T: PartialEq + std::fmt::Display>(what: &str, lhs: T, rhs: T) -> Option<String> {
    (lhs != rhs).then(|| format!("{what}: {lhs} != {rhs}"))
}

fn identities(range: NRange) -> Result<Vec<Check>, Failure> {
    let mut checks = Vec::new();
    for n in range.lo.max(1)..=range.hi {
        if n >= 2 {
            let mut failure = None;
            for m in 1..i64::from(n) {
                failure = failure.or(mismatch(
                    &format!("T({n},{m}) vs S*({},{m})", i64::from(n) + m - 1),
                    tree_count_t(n, m)?,
                    tree_count_via_partition(n, m)?,
                ));
            }
            checks.push(Check::new("identities", "trees-as-partitions", n, failure));
            let mut row_sum = tree_count_t(n, 1)?;
            for m in 2..i64::from(n) {
                row_sum += tree_count_t(n, m)?;
            }
            checks.push(Check::new(
                "identities",
                "tree-row-sum",
                n,
                mismatch("row sum vs t_n", row_sum, schroeder_t(n)?),
            ));
        }
        let becker = mismatch("B_n vs B*_{n+1} + B*_n", bell(n)?, bell_star(n + 1)? + bell_star(n)?);
        checks.push(Check::new("identities", "becker", n, becker));
        if n >= 2 {
            let alternating = mismatch("alternating sum vs B*_n", bell_star_alternating(n)?, bell_star(n)?);
            checks.push(Check::new("identities", "alternating-sum", n, alternating));
        }
    }
    Ok(checks)
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Roots => "roots",
        Suite::Slc => "slc",
        Suite::Limits => "limits",
        Suite::Identities => "identities",
    }
}

fn plain(out: &mut dyn Write, c: &Check) -> CmdResult {
    let status = if c.passed { "PASS" } else { "FAIL" };
    write!(out, "{status} {} {} n={}", c.suite, c.name, c.n)?;
    if let Some(f) = &c.failure {
        write!(out, ": {f}")?;
    }
    writeln!(out)?;
    for p in &c.roots {
        let intervals: Vec<String> =
            p.roots.iter().map(|r| if r.exact { r.lo.clone() } else { format!("[{}, {}]", r.lo, r.hi) }).collect();
        writeln!(out, "  {} (degree {}): {}", p.label, p.degree, intervals.join(" "))?;
    }
    Ok(())
}

pub fn run(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let checks = match args.suite {
        Suite::Roots => roots(args.n, &cli.width)?,
        Suite::Slc => slc(args.n),
        Suite::Limits => limits(args.n, args.family)?,
        Suite::Identities => identities(args.n)?,
    };
    match cli.format {
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["suite", "name", "n", "passed", "failure"])?;
            for c in &checks {
                w.write_record([
                    c.suite,
                    &c.name,
                    &c.n.to_string(),
                    &c.passed.to_string(),
                    c.failure.as_deref().unwrap_or(""),
                ])?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            for c in &checks {
                json_line(out, c)?;
            }
        }
        OutputFormat::Plain => {
            for c in &checks {
                plain(out, c)?;
            }
        }
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let summary = format!("{}: {} checks, {failed} failed", suite_name(args.suite), checks.len());
    if cli.format == OutputFormat::Plain {
        writeln!(out, "{summary}")?;
    } else {
        eprintln!("{summary}");
    }
    if failed > 0 {
        return Err(Failure::Check(summary));
    }
    Ok(())
}
