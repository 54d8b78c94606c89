//! Integer polynomials, certified real roots, log-concavity and truncated
//! bivariate series.

mod logconcave;
mod poly;
mod roots;
mod series;
mod verify;

pub use logconcave::{check_newton, check_slc, is_unimodal, ConcavityFailure};
pub use poly::{s_star_poly, tree_poly, IntPolynomial, SStarPolys, TreePolys};
pub use roots::{
    default_width, isolate_real_roots, isolate_real_roots_seeded, refine_interval, root_bound, RootInterval,
    RootIntervalView, RootIntervals,
};
pub use series::{functional_equation_residual, tree_series, TruncatedSeries2};
pub use verify::{
    verify_interlacing, verify_interlacing_range, verify_tree_roots, verify_tree_roots_range, InterlacingReport,
    PolyRoots, TreeRootReport,
};
