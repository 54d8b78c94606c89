use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

use phylocount::asympt::{lambert_r, stats_s_asymp, stats_sstar_asymp};
use phylocount::bigcount::{
    bell, bell_star, format_record, parse_record, phylo_f_star, schroeder_t, semilabeled_f, stirling2, stirling2_star,
    tree_count_t, tree_count_via_partition, TriangleFamily,
};
use phylocount::dist_stats::{row_stats_pgf, stats_closed, Family};
use phylocount::genpoly::{check_slc, is_unimodal};
use phylocount::oracle::{becker_inverse, becker_map, SetPartition};

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

/// A random partition of `{1..n}` from an arbitrary block labeling.
fn partition() -> impl Strategy<Value = SetPartition> {
    (1u32..=9).prop_flat_map(|n| prop::collection::vec(0..n, n as usize)).prop_map(|labels| {
        let n = labels.len() as u32;
        let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); n as usize];
        for (i, b) in labels.into_iter().enumerate() {
            blocks[b as usize].push(i as u32 + 1);
        }
        blocks.retain(|b| !b.is_empty());
        SetPartition::new(n, blocks).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trees_are_singleton_free_partitions(n in 2u32..60, m_frac in 0.0f64..1.0) {
        let m = 1 + (m_frac * f64::from(n - 1)) as i64;
        let m = m.min(i64::from(n) - 1);
        prop_assert_eq!(tree_count_t(n, m).unwrap(), tree_count_via_partition(n, m).unwrap());
    }

    #[test]
    fn reflections(n in 1u32..80, k in 1i64..80) {
        prop_assume!(k <= i64::from(n));
        prop_assert_eq!(semilabeled_f(n, k).unwrap(), stirling2(n, i64::from(n) - k + 1).unwrap());
        prop_assert_eq!(phylo_f_star(n, k).unwrap(), stirling2_star(n, i64::from(n) - k + 1).unwrap());
    }

    #[test]
    fn row_sums(n in 1u32..120) {
        let s: BigUint = (1..=i64::from(n)).map(|k| stirling2(n, k).unwrap()).sum();
        prop_assert_eq!(s, bell(n).unwrap());
        let s: BigUint = (1..=i64::from(n)).map(|k| stirling2_star(n, k).unwrap()).sum();
        prop_assert_eq!(s, bell_star(n).unwrap());
        if n >= 2 {
            let t: BigUint = (1..i64::from(n)).map(|m| tree_count_t(n, m).unwrap()).sum();
            prop_assert_eq!(t, schroeder_t(n).unwrap());
        }
    }

    #[test]
    fn rows_are_strictly_log_concave(f in family(), n in 1u32..150) {
        let row = f.row(n).unwrap();
        prop_assert!(check_slc(&row).is_ok());
        prop_assert!(is_unimodal(&row.values));
        prop_assert!(row.values.iter().all(|v| !v.is_zero()));
    }

    #[test]
    fn closed_forms_match_generating_polynomials(f in family(), n in 4u32..90) {
        let closed = stats_closed(f, n).unwrap();
        let pgf = row_stats_pgf(f, n).unwrap();
        prop_assert_eq!(&closed.mean, &pgf.mean);
        prop_assert_eq!(&closed.variance, &pgf.variance);
        prop_assert!(closed.var_f > 0.0);
    }

    #[test]
    fn singleton_free_mean_trails_by_about_r(n in 30u32..400) {
        // E_S - E_S* grows like r, the ratio stays within fixed bounds.
        let (ms, _) = stats_s_asymp(n).unwrap();
        let (mstar, _) = stats_sstar_asymp(n).unwrap();
        let r = lambert_r(f64::from(n)).unwrap();
        let ratio = (ms.value - mstar.value) / r;
        prop_assert!((0.5..=1.5).contains(&ratio), "ratio {}", ratio);
        let exact = row_stats_pgf(Family::S, n).unwrap().mean_f - row_stats_pgf(Family::SStar, n).unwrap().mean_f;
        prop_assert!((0.5..=1.5).contains(&(exact / r)), "exact ratio {}", exact / r);
    }

    #[test]
    fn becker_round_trip(p in partition()) {
        if p.has_singleton() {
            let q = becker_map(&p).unwrap();
            prop_assert!(!q.has_singleton());
            prop_assert_eq!(q.n, p.n + 1);
            prop_assert_eq!(becker_inverse(&q).unwrap(), p);
        } else if p.n >= 2 {
            let q = becker_inverse(&p).unwrap();
            prop_assert!(q.has_singleton());
            prop_assert_eq!(becker_map(&q).unwrap(), p);
        }
    }

    #[test]
    fn cache_records_round_trip(tri in prop::sample::select(TriangleFamily::ALL.to_vec()), n in 2u32..60) {
        let row = tri.row_at(n).unwrap();
        prop_assume!(!row.is_empty());
        let line = format_record(tri, &row);
        let parsed = parse_record(&line, 1).unwrap();
        prop_assert_eq!(parsed.family, tri);
        prop_assert_eq!(&parsed.row, &row);
        prop_assert_eq!(format_record(parsed.family, &parsed.row), line);
    }

    #[test]
    fn lambert_residual(exp in -3.0f64..12.0) {
        let n = 10f64.powf(exp);
        let r = lambert_r(n).unwrap();
        prop_assert!(r > 0.0);
        prop_assert!(((r * r.exp() - n) / n).abs() <= 1e-13);
    }
}
