//! Exact values against asymptotic estimates, one record per quantity.

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;

use super::formulas::{
    bell_moser_wyman, fstar_mean_asymp, mode_sstar_asymp, mode_t_asymp, relative_error, schroeder_t_asymp,
    stats_s_asymp, stats_s_salvy, stats_sstar_asymp, stats_t_asymp, AsympEstimate, ErrorOrder,
};
use crate::bigcount::{bell, schroeder_t};
use crate::dist_stats::{row_stats_pgf, stats_closed, Family};
use crate::numeric::{float_string, ln_biguint, rational_decimal, rational_to_f64};
use crate::Result;

/// Significant digits of the exact column.
const EXACT_DIGITS: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Mean,
    Variance,
    MeanSalvy,
    VarianceSalvy,
    /// `n - n/r + r + 1` for the `F*` mean.
    MeanLeading,
    ModeIndex,
    LnModeValue,
    LnBell,
    /// `ln` of the row sum: `t_{n+1}` for row `n` of `T`.
    LnT,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::Mean => "mean",
            Quantity::Variance => "variance",
            Quantity::MeanSalvy => "mean_salvy",
            Quantity::VarianceSalvy => "variance_salvy",
            Quantity::MeanLeading => "mean_leading",
            Quantity::ModeIndex => "mode_index",
            Quantity::LnModeValue => "ln_mode_value",
            Quantity::LnBell => "ln_bell",
            Quantity::LnT => "ln_t",
        }
    }

    /// Quantities with an estimate for `family`.
    pub fn for_family(family: Family) -> &'static [Quantity] {
        use Quantity::*;
        match family {
            Family::S => &[Mean, Variance, MeanSalvy, VarianceSalvy, LnBell],
            Family::SStar => &[Mean, Variance, MeanSalvy, VarianceSalvy, ModeIndex, LnModeValue],
            Family::F => &[Mean, Variance],
            Family::FStar => &[Mean, Variance, MeanLeading],
            Family::T => &[Mean, Variance, ModeIndex, LnModeValue, LnT],
        }
    }
}

/// One line of a `compare` report.
///
/// `scaled_residual` is `|exact - estimate|` times the scale of the declared
/// error order. Log-scale quantities use the relative error of the
/// underlying value instead of the difference of logarithms; mode indices
/// use the offset in units of `sqrt(n)/r` (resp. `sqrt(n)`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub n: u32,
    pub family: Family,
    pub quantity: Quantity,
    /// The exact value, correctly rounded to 20 significant digits.
    pub exact: String,
    pub exact_f: f64,
    pub estimate: f64,
    pub scaled_residual: f64,
    pub error_order: ErrorOrder,
}

impl Comparison {
    pub fn csv_header() -> [&'static str; 7] {
        ["n", "family", "quantity", "exact", "estimate", "scaled_residual", "error_order"]
    }

    pub fn csv_record(&self) -> [String; 7] {
        [
            self.n.to_string(),
            self.family.to_string(),
            self.quantity.as_str().into(),
            self.exact.clone(),
            float_string(self.estimate),
            float_string(self.scaled_residual),
            self.error_order.label().into(),
        ]
    }
}

struct Builder {
    family: Family,
    n: u32,
}

impl Builder {
    fn linear(&self, quantity: Quantity, exact: &BigRational, est: AsympEstimate) -> Comparison {
        let exact_f = rational_to_f64(exact);
        Comparison {
            n: self.n,
            family: self.family,
            quantity,
            exact: rational_decimal(exact, EXACT_DIGITS),
            exact_f,
            estimate: est.value,
            scaled_residual: (exact_f - est.value).abs() * est.error_order.scale(self.n, est.r),
            error_order: est.error_order,
        }
    }

    fn log(&self, quantity: Quantity, exact: &BigUint, est: AsympEstimate) -> Comparison {
        let exact_ln = ln_biguint(exact);
        Comparison {
            n: self.n,
            family: self.family,
            quantity,
            exact: float_string(exact_ln),
            exact_f: exact_ln,
            estimate: est.ln(),
            scaled_residual: relative_error(&est, exact).abs() * est.error_order.scale(self.n, est.r),
            error_order: est.error_order,
        }
    }

    fn mode(&self, j: u32, estimate: f64, unit: f64) -> Comparison {
        Comparison {
            n: self.n,
            family: self.family,
            quantity: Quantity::ModeIndex,
            exact: j.to_string(),
            exact_f: f64::from(j),
            estimate,
            scaled_residual: (f64::from(j) - estimate).abs() / unit,
            error_order: ErrorOrder::Heuristic,
        }
    }

    fn mode_value(&self, value: &BigUint, ln_estimate: f64) -> Comparison {
        let exact_ln = ln_biguint(value);
        Comparison {
            n: self.n,
            family: self.family,
            quantity: Quantity::LnModeValue,
            exact: float_string(exact_ln),
            exact_f: exact_ln,
            estimate: ln_estimate,
            scaled_residual: (ln_estimate - exact_ln).exp_m1().abs(),
            error_order: ErrorOrder::Heuristic,
        }
    }
}

fn exact_stats(family: Family, n: u32) -> Result<crate::dist_stats::DistStats> {
    stats_closed(family, n).or_else(|_| row_stats_pgf(family, n))
}

fn mode_of(family: Family, n: u32) -> Result<(u32, BigUint)> {
    let row = family.row(n)?;
    let (k, v) = row
        .entries()
        .fold(None::<(u32, &BigUint)>, |best, (k, v)| match best {
            Some((_, b)) if v <= b => best,
            _ => Some((k, v)),
        })
        .expect("nonempty row");
    Ok((k, v.clone()))
}

/// Comparisons of `quantity` for row `n` of `family`; empty when the
/// estimate is undefined there.
pub fn compare_quantity(family: Family, n: u32, quantity: Quantity) -> Result<Vec<Comparison>> {
    use Quantity::*;
    let b = Builder { family, n };
    let min_n = match (family, quantity) {
        (Family::T, _) => 4,
        (_, MeanSalvy | VarianceSalvy) => 16,
        _ => 10,
    };
    if n < min_n || !Quantity::for_family(family).contains(&quantity) {
        return Ok(Vec::new());
    }
    let reflect = |mut e: AsympEstimate| {
        e.value = f64::from(n) + 1.0 - e.value;
        e
    };
    let out = match quantity {
        Mean | Variance => {
            let stats = exact_stats(family, n)?;
            let (mean, var) = match family {
                Family::S => stats_s_asymp(n)?,
                Family::F => {
                    let (m, v) = stats_s_asymp(n)?;
                    (reflect(m), v)
                }
                Family::SStar => stats_sstar_asymp(n)?,
                Family::FStar => {
                    let (m, v) = stats_sstar_asymp(n)?;
                    (reflect(m), v)
                }
                Family::T => stats_t_asymp(n)?,
            };
            if quantity == Mean {
                b.linear(Mean, &stats.mean, mean)
            } else {
                b.linear(Variance, &stats.variance, var)
            }
        }
        MeanSalvy | VarianceSalvy => {
            let stats = exact_stats(family, n)?;
            let (mean, var) = stats_s_salvy(n)?;
            let (exact, est) = if quantity == MeanSalvy { (&stats.mean, mean) } else { (&stats.variance, var) };
            // The error order is relative: scale by the exact value.
            let mut c = b.linear(quantity, exact, est);
            c.scaled_residual /= c.exact_f.abs();
            c
        }
        MeanLeading => {
            let stats = exact_stats(family, n)?;
            let est = fstar_mean_asymp(n)?;
            let mut c = b.linear(MeanLeading, &stats.mean, est);
            c.scaled_residual *= est.r.expect("r-based estimate");
            c
        }
        ModeIndex => {
            let (j, _) = mode_of(family, n)?;
            let nf = f64::from(n);
            match family {
                Family::SStar => {
                    let est = mode_sstar_asymp(n)?;
                    b.mode(j, est.j, nf.sqrt() / (nf / est.j))
                }
                _ => b.mode(j, mode_t_asymp(n)?.j, nf.sqrt()),
            }
        }
        LnModeValue => {
            let (_, value) = mode_of(family, n)?;
            let est = match family {
                Family::SStar => mode_sstar_asymp(n)?,
                _ => mode_t_asymp(n)?,
            };
            b.mode_value(&value, est.ln_value)
        }
        LnBell => b.log(LnBell, &bell(n)?, bell_moser_wyman(n)?),
        LnT => b.log(LnT, &schroeder_t(n + 1)?, schroeder_t_asymp(n + 1)?),
    };
    Ok(vec![out])
}

/// Every available comparison for row `n` of `family`.
pub fn compare(family: Family, n: u32) -> Result<Vec<Comparison>> {
    let mut out = Vec::new();
    for &q in Quantity::for_family(family) {
        out.extend(compare_quantity(family, n, q)?);
    }
    Ok(out)
}

/// Scaled residuals of one quantity across several `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRecord {
    pub family: Family,
    pub quantity: Quantity,
    pub error_order: Option<ErrorOrder>,
    pub points: Vec<ConvergencePoint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergencePoint {
    pub n: u32,
    pub exact: f64,
    pub estimate: f64,
    pub scaled_residual: f64,
}

impl ConvergenceRecord {
    /// Every scaled residual is at most `factor` times the first one.
    pub fn bounded_by(&self, factor: f64) -> bool {
        match self.points.first() {
            None => true,
            Some(first) => self.points.iter().all(|p| p.scaled_residual <= factor * first.scaled_residual),
        }
    }

    /// Largest scaled residual relative to the first.
    pub fn growth(&self) -> f64 {
        let first = self.points.first().map_or(0.0, |p| p.scaled_residual);
        self.points.iter().map(|p| p.scaled_residual / first).fold(0.0, f64::max)
    }
}

pub fn convergence(family: Family, quantity: Quantity, ns: &[u32]) -> Result<ConvergenceRecord> {
    let mut points = Vec::with_capacity(ns.len());
    let mut error_order = None;
    for &n in ns {
        for c in compare_quantity(family, n, quantity)? {
            error_order = Some(c.error_order);
            points.push(ConvergencePoint {
                n,
                exact: c.exact_f,
                estimate: c.estimate,
                scaled_residual: c.scaled_residual,
            });
        }
    }
    Ok(ConvergenceRecord { family, quantity, error_order, points })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantities_per_family() {
        let rows = compare(Family::S, 20).unwrap();
        let names: Vec<_> = rows.iter().map(|c| c.quantity.as_str()).collect();
        assert_eq!(names, ["mean", "variance", "mean_salvy", "variance_salvy", "ln_bell"]);
        assert!(compare(Family::S, 9).unwrap().is_empty());
        assert_eq!(compare(Family::T, 4).unwrap().len(), 5);
        assert!(compare_quantity(Family::F, 50, Quantity::LnBell).unwrap().is_empty());
    }

    #[test]
    fn reflected_means_share_residuals() {
        let s = &compare_quantity(Family::S, 60, Quantity::Mean).unwrap()[0];
        let f = &compare_quantity(Family::F, 60, Quantity::Mean).unwrap()[0];
        assert!((s.scaled_residual - f.scaled_residual).abs() < 1e-9);
        assert!((s.exact_f + f.exact_f - 61.0).abs() < 1e-12);
    }

    #[test]
    fn exact_column_is_decimal() {
        let c = &compare_quantity(Family::T, 4, Quantity::Mean).unwrap()[0];
        // T_{5,.} = [1, 25, 105, 105] has mean 393/118.
        assert_eq!(c.exact, "3.3305084745762711864e0");
        assert_eq!(c.csv_record()[0], "4");
    }

    #[test]
    fn convergence_record() {
        let rec = convergence(Family::S, Quantity::Mean, &[50, 100]).unwrap();
        assert_eq!(rec.points.len(), 2);
        assert_eq!(rec.error_order, Some(ErrorOrder::OneOverN));
        assert!(rec.bounded_by(3.0));
        assert!(rec.growth() >= 1.0);
    }
}
