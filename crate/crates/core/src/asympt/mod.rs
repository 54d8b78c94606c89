//! Asymptotic estimates and their comparison with exact values.
//!
//! Partition statistics are expressed through `r = r(n)`, the positive root
//! of `r e^r = n`; tree statistics through `rho = 2 ln 2 - 1`. Quantities
//! that overflow a float (`B_n`, `t_n`, `n!`) are handled as logarithms.

mod convergence;
mod formulas;
mod lambert;

pub use convergence::{
    compare, compare_quantity, convergence, Comparison, ConvergencePoint, ConvergenceRecord, Quantity,
};
pub use formulas::{
    bell_moser_wyman, fstar_mean_asymp, h1z_numeric_check, ln_factorial, mode_sstar_asymp, mode_t_asymp,
    relative_error, schroeder_t_asymp, schroeder_t_asymp_terms, stats_s_asymp, stats_s_salvy, stats_sstar_asymp,
    stats_t_asymp, AsympEstimate, ErrorOrder, H1zCheck, ModeEstimate, Scale, H1Z_ORDER, RHO,
};
pub use lambert::{lambert_r, lambert_w0};
