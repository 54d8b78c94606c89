use phylocount::asympt::{compare_quantity, lambert_r, Quantity};
use phylocount::dist_stats::Family;

fn leading(n: u32) -> (f64, f64, f64) {
    let c = compare_quantity(Family::FStar, n, Quantity::MeanLeading).unwrap().remove(0);
    (c.exact_f, c.estimate, c.scaled_residual)
}

#[test]
fn fstar_mean_leading_is_a_ratio_limit() {
    let mut previous = f64::INFINITY;
    for n in [100, 200, 400, 800, 1600] {
        let (exact, estimate, _) = leading(n);
        let gap = (exact / estimate - 1.0).abs();
        assert!(gap < previous, "n = {n}: {gap:e}");
        previous = gap;
    }
    assert!(previous < 1e-3);
}

#[test]
fn fstar_mean_leading_neglected_term_is_half_over_r() {
    // Reflecting the S* mean leaves 1/(2r) + O(1/r^3) beyond n - n/r + r + 1.
    let mut previous = f64::INFINITY;
    for n in [100, 200, 400, 800, 1600] {
        let (exact, estimate, scaled) = leading(n);
        assert!(exact > estimate);
        let r = lambert_r(f64::from(n)).unwrap();
        assert!((scaled - (exact - estimate) * r).abs() < 1e-9 * scaled.max(1.0));
        let off = scaled - 0.5;
        assert!(off > 0.0 && off < previous, "n = {n}: {scaled}");
        previous = off;
    }
    assert!(previous < 0.03);
}

fn relative(family: Family, n: u32, q: Quantity) -> f64 {
    let c = compare_quantity(family, n, q).unwrap().remove(0);
    (c.exact_f / c.estimate - 1.0).abs()
}

#[test]
fn salvy_forms_are_within_a_few_percent() {
    // The two-term forms in ln n converge too slowly for a monotone check.
    for n in [100, 400, 1600] {
        assert!(relative(Family::S, n, Quantity::MeanSalvy) < 0.03, "n = {n}");
        assert!(relative(Family::SStar, n, Quantity::MeanSalvy) < 0.12, "n = {n}");
    }
    let sstar_var: Vec<f64> = [100, 400, 1600].map(|n| relative(Family::SStar, n, Quantity::VarianceSalvy)).to_vec();
    assert!(sstar_var.windows(2).all(|w| w[1] < w[0]), "{sstar_var:?}");
    assert!(sstar_var[2] < 0.1);
}

#[test]
fn mode_estimates_track_the_exact_mode() {
    let offsets: Vec<f64> = [100, 400, 1600]
        .map(|n| compare_quantity(Family::SStar, n, Quantity::ModeIndex).unwrap().remove(0).scaled_residual)
        .to_vec();
    assert!(offsets.windows(2).all(|w| w[1] < w[0]), "{offsets:?}");
    for n in [100, 200, 400] {
        let c = compare_quantity(Family::T, n, Quantity::ModeIndex).unwrap().remove(0);
        assert!(c.scaled_residual < 0.1, "n = {n}: {}", c.scaled_residual);
    }
}
