use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phylocount"))
        .args(args)
        .env_remove("PHYLOCOUNT_FORMAT")
        .env_remove("PHYLOCOUNT_CACHE")
        .env_remove("PHYLOCOUNT_FAMILY")
        .env_remove("PHYLOCOUNT_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn table_sstar_five() {
    let o = run(&["table", "--family", "sstar", "--n", "5", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "family,n,k_min,row,sum\nsstar,5,1,\"1,10\",11\n");
}

#[test]
fn table_t_four_sums_to_26() {
    let o = run(&["table", "--family", "t", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["sum"], "26");
    assert_eq!(v["row"], serde_json::json!(["1", "10", "15"]));
}

#[test]
fn table_s_one() {
    let o = run(&["table", "--family", "s", "--n", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["row"], serde_json::json!(["1"]));
}

#[test]
fn table_reflected_rows() {
    let o = run(&["table", "--family", "fstar", "--n", "6"]);
    assert_eq!(stdout(&o), "fstar n=6 k=4..6: 15,25,1 (sum 41)\n");
}

#[test]
fn stats_t_two() {
    let o = run(&["stats", "--family", "t", "--n", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["mean"], "7/4");
    assert_eq!(v["variance"], "3/16");
}

#[test]
fn stats_csv_floats_have_17_digits() {
    let o = run(&["stats", "--family", "s", "--n", "3", "--format", "csv"]);
    let line = stdout(&o).lines().nth(1).unwrap().to_string();
    assert!(line.starts_with("s,3,2,2/5,2.0000000000000000e0,4.0000000000000002e-1,"), "{line}");
}

#[test]
fn stats_of_an_empty_row_is_a_usage_error() {
    assert_eq!(code(&run(&["stats", "--family", "sstar", "--n", "1"])), 2);
    let o = run(&["stats", "--family", "sstar", "--n", "1..3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn compare_is_csv_and_deterministic() {
    let a = run(&["compare", "--family", "sstar", "--n", "20..22"]);
    let b = run(&["compare", "--family", "sstar", "--n", "20..22", "--format", "plain"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,family,quantity,exact,estimate,scaled_residual,error_order"));
    assert!(lines.all(|l| l.split(',').count() == 7));
}

#[test]
fn verify_identities_passes() {
    let o = run(&["verify", "--suite", "identities", "--n", "1..40"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).ends_with("identities: 157 checks, 0 failed\n"));
}

#[test]
fn verify_roots_lists_intervals() {
    let o = run(&["verify", "--suite", "roots", "--n", "1..60"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(
        text.contains("  S_4 (degree 2): [-187649984473771/562949953421312, -375299968947541/1125899906842624] 0\n")
    );
    assert!(text.contains("  P_60 (degree 60): "));
    assert!(text.ends_with("roots: 119 checks, 0 failed\n"));
}

#[test]
fn verify_slc_small_range() {
    let o = run(&["verify", "--suite", "slc", "--n", "1..30", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert!(!stdout(&o).contains(",false,"));
}

#[test]
fn verify_limits_needs_two_rows() {
    assert_eq!(code(&run(&["verify", "--suite", "limits", "--n", "50"])), 2);
}

#[test]
fn oracle_with_dump() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("objects.jsonl");
    let o = run(&["oracle", "--n", "6", "--trees", "4", "--dump", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(&path).unwrap();
    let objects: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let partitions = objects.iter().filter(|v| v["kind"] == "partition").count();
    assert_eq!(partitions, 1 + 2 + 5 + 15 + 52 + 203);
    // Semilabeled trees with n non-root vertices number B_n.
    let trees = objects.iter().filter(|v| v["kind"] == "tree").count();
    assert_eq!(trees, 1 + 2 + 5 + 15);
    assert!(objects
        .contains(&serde_json::json!({"kind": "partition", "n": 3, "blocks": [[1], [2, 3]], "singleton_free": false})));
}

#[test]
fn oracle_caps() {
    assert_eq!(code(&run(&["oracle", "--n", "13"])), 2);
    assert_eq!(code(&run(&["oracle", "--trees", "10"])), 2);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["table", "--family", "x", "--n", "3"][..],
        &["table", "--family", "s", "--n", "5..3"],
        &["table", "--family", "s"],
        &["table", "--family", "s", "--n", "0"],
        &["table", "--family", "t", "--n", "1"],
        &["table", "--family", "s", "--n", "3", "--format", "xml"],
        &["verify", "--suite", "bogus", "--n", "3"],
        &["verify", "--suite", "roots", "--n", "3", "--width", "0"],
        &["cache", "check"],
        &["nonsense"],
    ] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn environment_overrides() {
    let o = Command::new(env!("CARGO_BIN_EXE_phylocount"))
        .args(["table"])
        .env("PHYLOCOUNT_FAMILY", "sstar")
        .env("PHYLOCOUNT_N", "4")
        .env("PHYLOCOUNT_FORMAT", "csv")
        .env_remove("PHYLOCOUNT_CACHE")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "family,n,k_min,row,sum\nsstar,4,1,\"1,3\",4\n");
}

#[test]
fn cache_build_check_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.cache");
    let p = path.to_str().unwrap();
    assert_eq!(code(&run(&["cache", "build", "--family", "s", "--n", "12", "--cache", p])), 0);
    assert_eq!(code(&run(&["cache", "build", "--family", "t", "--n", "8", "--cache", p])), 0);
    let check = run(&["cache", "check", "--cache", p]);
    assert_eq!(code(&check), 0, "{}", stdout(&check));

    let cached = run(&["table", "--family", "f", "--n", "1..12", "--cache", p]);
    let fresh = run(&["table", "--family", "f", "--n", "1..12"]);
    assert_eq!(cached.stdout, fresh.stdout);

    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, text.replace("s,4,1,1,7,6,1\n", "s,4,1,1,7,5,1\n")).unwrap();
    let check = run(&["cache", "check", "--cache", p]);
    assert_eq!(code(&check), 1);
    assert!(stdout(&check).contains("FAIL s: row 4"));

    fs::write(&path, "s,1,1,01\n").unwrap();
    assert_eq!(code(&run(&["cache", "check", "--cache", p])), 1);
}

#[test]
fn table_extends_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.cache");
    let p = path.to_str().unwrap();
    let o = run(&["table", "--family", "sstar", "--n", "6", "--cache", p]);
    assert_eq!(stdout(&o), "sstar n=6 k=1..3: 1,25,15 (sum 41)\n");
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 6);
}
