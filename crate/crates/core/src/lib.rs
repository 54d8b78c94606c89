//! Exact and asymptotic enumeration of set partitions and phylogenetic trees.
//!
//! The crate is organised around six areas:
//!
//! - [`bigcount`]: exact big-integer triangles `S(n,k)`, `S*(n,k)`, `T(n,m)`
//!   and their row sums (Bell numbers, singleton-free Bell numbers, Schröder
//!   numbers), with an on-disk row cache.
//! - [`genpoly`]: integer polynomials, certified real-root isolation,
//!   interlacing and log-concavity checks, truncated bivariate series.
//! - [`dist_stats`]: exact means and variances of row distributions and
//!   their distance to the normal law.
//! - [`asympt`]: asymptotic estimates driven by the root of `r e^r = n`.
//! - [`oracle`]: brute-force enumeration of partitions and trees.
//! - [`config`]: parsers for the command-line vocabulary.

pub mod asympt;
pub mod bigcount;
pub mod config;
pub mod dist_stats;
pub mod error;
pub mod genpoly;
pub mod numeric;
pub mod oracle;

pub use error::{Error, Result};
