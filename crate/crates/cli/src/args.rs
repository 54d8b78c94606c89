use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use phylocount::config::{NRange, OutputFormat, Width};
use phylocount::dist_stats::Family;

#[derive(Debug, Parser)]
#[command(name = "phylocount", version, about = "Exact and asymptotic counts of set partitions and phylogenetic trees")]
pub struct Cli {
    /// Output format: csv, json (one object per line) or plain.
    #[arg(long, global = true, env = "PHYLOCOUNT_FORMAT", default_value = "plain")]
    pub format: OutputFormat,

    /// Row cache file, read before computing and extended afterwards.
    #[arg(long, global = true, env = "PHYLOCOUNT_CACHE")]
    pub cache: Option<PathBuf>,

    /// Width of certified root intervals: `2^-K`, `p/q` or an integer.
    #[arg(long, global = true, env = "PHYLOCOUNT_WIDTH", default_value = "2^-48")]
    pub width: Width,

    /// Lift the size caps of brute-force enumeration.
    #[arg(long, global = true, env = "PHYLOCOUNT_UNSAFE_SIZES", action = ArgAction::SetTrue)]
    pub unsafe_sizes: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rows of a counting array with their sums. `t` rows are indexed by
    /// their number of leaves, so row `n` sums to `t_n`.
    Table(FamilyRange),
    /// Exact means and variances, with distance to the normal law. `t` row
    /// `n` is the distribution of internal vertices over trees with `n + 1`
    /// leaves.
    Stats(FamilyRange),
    /// Exact values against their asymptotic estimates, as CSV.
    Compare(FamilyRange),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Compare brute-force enumeration with the recurrences.
    Oracle(OracleArgs),
    /// Build or check a row cache.
    Cache(CacheArgs),
}

#[derive(Debug, Args)]
pub struct FamilyRange {
    /// s, sstar, f, fstar or t.
    #[arg(long, env = "PHYLOCOUNT_FAMILY")]
    pub family: Family,
    /// Row index `N` or inclusive range `A..B`.
    #[arg(long, env = "PHYLOCOUNT_N")]
    pub n: NRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Real roots of the tree polynomials and interlacing of `S_m`.
    Roots,
    /// Strict log-concavity and Newton's inequalities.
    Slc,
    /// Normal-approximation trends between the ends of the range.
    Limits,
    /// Exact identities between the arrays and their row sums.
    Identities,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, env = "PHYLOCOUNT_N")]
    pub n: NRange,
    /// Restrict the `limits` suite to one family.
    #[arg(long, env = "PHYLOCOUNT_FAMILY")]
    pub family: Option<Family>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Largest partitioned ground set.
    #[arg(long, default_value_t = 10)]
    pub n: u32,
    /// Largest number of non-root tree vertices.
    #[arg(long, default_value_t = 9)]
    pub trees: u32,
    /// Write every enumerated object to this file as JSON lines.
    #[arg(long)]
    pub dump: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CacheArgs {
    #[command(subcommand)]
    pub action: CacheAction,
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Compute rows up to `--n`, indexed as in `table`, and store them.
    Build {
        #[arg(long, env = "PHYLOCOUNT_FAMILY")]
        family: Family,
        /// Last row index to store.
        #[arg(long, env = "PHYLOCOUNT_N")]
        n: u32,
    },
    /// Parse the cache and recompute every stored row.
    Check,
}
