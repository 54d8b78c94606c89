use std::f64::consts::{LN_2, PI};

use num_bigint::BigUint;
use serde::Serialize;

use super::lambert::{lambert_r, lambert_w0};
use crate::bigcount::{bell, sequence_prefix, SequenceKind};
use crate::numeric::{ln_biguint, ratio_to_f64};
use crate::{Error, Result};

/// `rho = 2 ln 2 - 1`, the radius of convergence of `sum t_n z^n / n!`.
pub const RHO: f64 = 2.0 * LN_2 - 1.0;

/// Declared size of the neglected terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ErrorOrder {
    #[serde(rename = "O(1/n)")]
    OneOverN,
    #[serde(rename = "O(r/n)")]
    ROverN,
    #[serde(rename = "O(1/ln n)")]
    OneOverLnN,
    #[serde(rename = "O(n^-9/2 scale)")]
    NineHalves,
    #[serde(rename = "heuristic")]
    Heuristic,
}

impl ErrorOrder {
    pub fn label(self) -> &'static str {
        match self {
            ErrorOrder::OneOverN => "O(1/n)",
            ErrorOrder::ROverN => "O(r/n)",
            ErrorOrder::OneOverLnN => "O(1/ln n)",
            ErrorOrder::NineHalves => "O(n^-9/2 scale)",
            ErrorOrder::Heuristic => "heuristic",
        }
    }

    /// Factor turning an error of this order into an `O(1)` quantity.
    pub fn scale(self, n: u32, r: Option<f64>) -> f64 {
        let n = f64::from(n);
        match self {
            ErrorOrder::OneOverN => n,
            ErrorOrder::ROverN => n / r.unwrap_or_else(|| lambert_r(n).unwrap_or(1.0)),
            ErrorOrder::OneOverLnN => n.ln(),
            // Relative to the leading n^-3/2 bracket term.
            ErrorOrder::NineHalves => n.powi(3),
            ErrorOrder::Heuristic => 1.0,
        }
    }
}

/// How `AsympEstimate::value` is expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Linear,
    /// Natural logarithm of the estimate.
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsympEstimate {
    pub value: f64,
    pub scale: Scale,
    pub error_order: ErrorOrder,
    pub n: u32,
    pub r: Option<f64>,
    pub rho: Option<f64>,
}

impl AsympEstimate {
    fn linear(value: f64, error_order: ErrorOrder, n: u32, r: Option<f64>, rho: Option<f64>) -> Self {
        AsympEstimate { value, scale: Scale::Linear, error_order, n, r, rho }
    }

    fn log(value: f64, error_order: ErrorOrder, n: u32, r: Option<f64>, rho: Option<f64>) -> Self {
        AsympEstimate { value, scale: Scale::Log, error_order, n, r, rho }
    }

    /// Natural logarithm of the estimated quantity.
    pub fn ln(&self) -> f64 {
        match self.scale {
            Scale::Log => self.value,
            Scale::Linear => self.value.ln(),
        }
    }

    /// The estimate itself; may overflow for log-scale estimates.
    pub fn linear_value(&self) -> f64 {
        match self.scale {
            Scale::Log => self.value.exp(),
            Scale::Linear => self.value,
        }
    }
}

fn need(n: u32, min: u32, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::domain(format!("{what} requires n >= {min}, got {n}")));
    }
    Ok(())
}

fn r_of(n: u32) -> Result<f64> {
    lambert_r(f64::from(n))
}

/// `ln n!`.
pub fn ln_factorial(n: u32) -> f64 {
    libm::lgamma(f64::from(n) + 1.0)
}

/// Moser–Wyman approximation of `B_n`, as a logarithm:
///
/// `B_n ~ (r+1)^(-1/2) exp(n (r + 1/r - 1) - 1) (1 - r^2 (2r^2 + 7r + 10) / (24 n (r+1)^3))`.
pub fn bell_moser_wyman(n: u32) -> Result<AsympEstimate> {
    need(n, 10, "bell_moser_wyman")?;
    let r = r_of(n)?;
    let nf = f64::from(n);
    let r1 = r + 1.0;
    let correction = 1.0 - r * r * (2.0 * r * r + 7.0 * r + 10.0) / (24.0 * nf * r1.powi(3));
    let ln = -0.5 * r1.ln() + nf * (r + 1.0 / r - 1.0) - 1.0 + correction.ln();
    Ok(AsympEstimate::log(ln, ErrorOrder::OneOverN, n, Some(r), None))
}

/// Mean and variance of `S(n,.)` in terms of `r`.
pub fn stats_s_asymp(n: u32) -> Result<(AsympEstimate, AsympEstimate)> {
    need(n, 10, "stats_s_asymp")?;
    let r = r_of(n)?;
    let nf = f64::from(n);
    let r1 = r + 1.0;
    let mean = nf / r - 1.0 + r / (2.0 * r1 * r1);
    let var = nf / (r * r1) + r * (r - 1.0) / (2.0 * r1.powi(4)) - 1.0;
    Ok((
        AsympEstimate::linear(mean, ErrorOrder::OneOverN, n, Some(r), None),
        AsympEstimate::linear(var, ErrorOrder::OneOverN, n, Some(r), None),
    ))
}

/// Mean and variance of `S(n,.)` (and of `S*(n,.)`) in terms of `n` only.
pub fn stats_s_salvy(n: u32) -> Result<(AsympEstimate, AsympEstimate)> {
    need(n, 16, "stats_s_salvy")?;
    let nf = f64::from(n);
    let l = nf.ln();
    let ll = l.ln();
    let mean = nf / l + nf * ll / (l * l);
    let var = nf / (l * l) + nf * (2.0 * ll - 1.0) / l.powi(3);
    Ok((
        AsympEstimate::linear(mean, ErrorOrder::OneOverLnN, n, None, None),
        AsympEstimate::linear(var, ErrorOrder::OneOverLnN, n, None, None),
    ))
}

/// Mean and variance of `S*(n,.)` in terms of `r`.
pub fn stats_sstar_asymp(n: u32) -> Result<(AsympEstimate, AsympEstimate)> {
    need(n, 10, "stats_sstar_asymp")?;
    let r = r_of(n)?;
    let nf = f64::from(n);
    let r1 = r + 1.0;
    let mean = nf / r - r - 1.0 / (2.0 * r) + 1.0 / (2.0 * r * r1 * r1);
    let var = nf / (r * r1) - r + 1.0 - 2.0 / r1 - 1.0 / (2.0 * r1 * r1) - 1.0 / (2.0 * r1.powi(3)) + 1.0 / r1.powi(4);
    Ok((
        AsympEstimate::linear(mean, ErrorOrder::OneOverN, n, Some(r), None),
        AsympEstimate::linear(var, ErrorOrder::OneOverN, n, Some(r), None),
    ))
}

/// Mean of `F*(n,.)` as `n - n/r + r + 1`; the neglected term is only known
/// to be `o(1/r)`.
pub fn fstar_mean_asymp(n: u32) -> Result<AsympEstimate> {
    need(n, 10, "fstar_mean_asymp")?;
    let r = r_of(n)?;
    let nf = f64::from(n);
    Ok(AsympEstimate::linear(nf - nf / r + r + 1.0, ErrorOrder::Heuristic, n, Some(r), None))
}

/// Estimated mode of a row and the row's value there (as a logarithm).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeEstimate {
    pub j: f64,
    pub ln_value: f64,
}

/// `J_n ~ n/r` and `S*(n,J_n) ~ r B_{n-1} / sqrt(2 n pi)`.
pub fn mode_sstar_asymp(n: u32) -> Result<ModeEstimate> {
    need(n, 10, "mode_sstar_asymp")?;
    let r = r_of(n)?;
    let nf = f64::from(n);
    let ln_value = r.ln() + ln_biguint(&bell(n - 1)?) - 0.5 * (2.0 * nf * PI).ln();
    Ok(ModeEstimate { j: nf / r, ln_value })
}

/// `1/rho^2 - 2/rho - 1`, four times the leading variance coefficient of
/// `T_{n+1,.}`.
fn t_variance_coefficient() -> f64 {
    1.0 / (RHO * RHO) - 2.0 / RHO - 1.0
}

/// Mean and variance of `T_{n+1,.}`.
pub fn stats_t_asymp(n: u32) -> Result<(AsympEstimate, AsympEstimate)> {
    need(n, 4, "stats_t_asymp")?;
    let nf = f64::from(n);
    let mean = (1.0 - RHO) / (2.0 * RHO) * nf + (0.75 - LN_2) / RHO;
    let var = nf / 4.0 * t_variance_coefficient() + (1.0 + 4.0 * LN_2 - 8.0 * LN_2 * LN_2) / (8.0 * RHO * RHO);
    Ok((
        AsympEstimate::linear(mean, ErrorOrder::OneOverN, n, None, Some(RHO)),
        AsympEstimate::linear(var, ErrorOrder::OneOverN, n, None, Some(RHO)),
    ))
}

/// Mode of `T_{n+1,.}` and its value
/// `n! / (pi sqrt(2) n rho^(n+1/2) sqrt(1/rho^2 - 2/rho - 1))`.
pub fn mode_t_asymp(n: u32) -> Result<ModeEstimate> {
    need(n, 4, "mode_t_asymp")?;
    let nf = f64::from(n);
    let ln_value = ln_factorial(n)
        - (PI * std::f64::consts::SQRT_2 * nf).ln()
        - (nf + 0.5) * RHO.ln()
        - 0.5 * t_variance_coefficient().ln();
    Ok(ModeEstimate { j: (1.0 - RHO) / (2.0 * RHO) * nf, ln_value })
}

/// Bracket coefficients of the `t_n` expansion, in powers `n^-(2i+3)/2`.
const T_BRACKET: [f64; 3] = [0.5, 3.0 / 16.0, 25.0 / 256.0];

/// `t_n ~ n! / (sqrt(pi) rho^(n-1/2)) (1/(2 n^3/2) + 3/(16 n^5/2) + 25/(256 n^7/2))`
/// truncated after `terms` bracket terms, as a logarithm.
pub fn schroeder_t_asymp_terms(n: u32, terms: usize) -> Result<AsympEstimate> {
    need(n, 1, "schroeder_t_asymp")?;
    if !(1..=T_BRACKET.len()).contains(&terms) {
        return Err(Error::domain(format!("bracket has 1..=3 terms, got {terms}")));
    }
    let nf = f64::from(n);
    let bracket: f64 =
        T_BRACKET[..terms].iter().enumerate().map(|(i, c)| c * nf.powf(-(2.0 * i as f64 + 3.0) / 2.0)).sum();
    let ln = ln_factorial(n) - 0.5 * PI.ln() - (nf - 0.5) * RHO.ln() + bracket.ln();
    Ok(AsympEstimate::log(ln, ErrorOrder::NineHalves, n, None, Some(RHO)))
}

pub fn schroeder_t_asymp(n: u32) -> Result<AsympEstimate> {
    need(n, 4, "schroeder_t_asymp")?;
    schroeder_t_asymp_terms(n, T_BRACKET.len())
}

/// `estimate / exact - 1` for a log-scale estimate of a positive integer.
pub fn relative_error(estimate: &AsympEstimate, exact: &BigUint) -> f64 {
    (estimate.ln() - ln_biguint(exact)).exp_m1()
}

/// Closed form of `H(1,z)` against its Taylor polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct H1zCheck {
    pub z: f64,
    pub closed_form: f64,
    pub series: f64,
    pub residual: f64,
    /// `t_{N+1} z^{N+1} / (N+1)!` inflated by the geometric factor
    /// `1 / (1 - z/rho)`.
    pub tail_bound: f64,
}

/// Terms of the series used by [`h1z_numeric_check`].
pub const H1Z_ORDER: u32 = 30;

/// Compares `H(1,z) = -W_0(-e^((z-1)/2) / 2) + (z-1)/2` with
/// `sum_{n<=30} t_n z^n / n!`.
pub fn h1z_numeric_check(z: f64) -> Result<H1zCheck> {
    if !(z > 0.0 && z < RHO) {
        return Err(Error::domain(format!("h1z_numeric_check needs 0 < z < rho, got {z}")));
    }
    let w = lambert_w0(-0.5 * ((z - 1.0) / 2.0).exp())?;
    let closed_form = -w + (z - 1.0) / 2.0;

    let t = sequence_prefix(SequenceKind::SchroederT, H1Z_ORDER + 1);
    let mut factorial = BigUint::from(1u32);
    let mut coeffs = Vec::with_capacity(t.len());
    for (i, tn) in t.iter().enumerate() {
        factorial *= BigUint::from(i + 1);
        coeffs.push(ratio_to_f64(tn, &factorial));
    }
    // Horner on sum_{n=1}^{N} c_n z^n.
    let series = coeffs[..H1Z_ORDER as usize].iter().rev().fold(0.0, |acc, c| (acc + c) * z);
    let next = coeffs[H1Z_ORDER as usize] * z.powi(H1Z_ORDER as i32 + 1);
    let tail_bound = next / (1.0 - z / RHO);
    Ok(H1zCheck { z, closed_form, series, residual: (closed_form - series).abs(), tail_bound })
}
