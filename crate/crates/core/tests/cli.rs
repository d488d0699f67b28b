mod common;

use common::{parse_figure, rectify, worst_defect, CHECK_INVOCATIONS};
use rectify::cli::RunReport;

fn stdout(o: &std::process::Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn every_check_passes_at_its_default_tolerance() {
    for args in CHECK_INVOCATIONS {
        let o = rectify(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("PASS"));
    }
}

#[test]
fn check_exit_code_follows_the_tolerance() {
    for args in CHECK_INVOCATIONS {
        let mut strict = args.to_vec();
        strict.extend(["--tol", "0", "--json"]);
        let o = rectify(&strict);
        let r: RunReport = serde_json::from_str(&stdout(&o)).unwrap();
        let residual = r.residual.unwrap();
        assert_eq!(o.status.code(), Some(if residual <= 0.0 { 0 } else { 1 }), "{args:?}");
        assert_eq!(r.passed, Some(residual <= 0.0));
    }
}

#[test]
fn ellint_k_at_zero_is_half_pi() {
    let o = rectify(&["ellint", "K", "--k", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim().parse::<f64>().unwrap(), std::f64::consts::FRAC_PI_2);
}

#[test]
fn agm_json_lists_iterates() {
    let o = rectify(&["agm", "--p", "1", "--q", "0.8", "--tol", "1e-15", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: RunReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.schema_version, 1);
    let it = r.iterates.unwrap();
    assert!((it[3].0 - it[3].1).abs() < 1e-11);
    assert!((it[2].0 - it[2].1).abs() > 1e-8);
}

#[test]
fn lemniscate_and_excess_verbs() {
    let o = rectify(&["lemniscate", "--radius", "1", "--json"]);
    let r: RunReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((r.values["quarter_arc"] - 1.311_028_777_146_06).abs() < 1e-13);
    let closed = rectify(&["excess", "closed", "--m", "2", "--n", "1"]);
    let landen = rectify(&["excess", "landen", "--a", "1", "--b", "2.8284271247461903"]);
    let (x, y): (f64, f64) = (stdout(&closed).trim().parse().unwrap(), stdout(&landen).trim().parse().unwrap());
    assert!((x - 0.265_596_407_637).abs() < 1e-11 && (x - y).abs() < 1e-12);
    let series = rectify(&["excess", "series", "--a", "0.1", "--b", "1", "--terms", "3"]);
    assert!(stdout(&series).contains("bound = "));
    assert_eq!(rectify(&["excess", "series", "--a", "0.1", "--b", "1", "--terms", "4"]).status.code(), Some(2));
    assert_eq!(rectify(&["excess", "finite", "--a", "1", "--b", "1"]).status.code(), Some(2));
}

#[test]
fn table_is_sorted_and_reproducible() {
    let args = ["table", "--op", "ellint-E", "--sweep", "k", "--from", "0", "--to", "0.9", "--step", "0.1"];
    let a = rectify(&args);
    assert_eq!(a.status.code(), Some(0));
    let text = stdout(&a);
    assert_eq!(text, stdout(&rectify(&args)));
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap().iter().collect::<Vec<_>>(), ["k", "value", "warnings"]);
    let ks: Vec<f64> = rdr.records().map(|r| r.unwrap()[0].parse().unwrap()).collect();
    assert_eq!(ks.len(), 10);
    assert!(ks.windows(2).all(|w| w[0] < w[1]));

    let json = rectify(&[
        "table",
        "--op",
        "landen-theorem",
        "--sweep",
        "t",
        "--from",
        "0.1",
        "--to",
        "0.5",
        "--step",
        "0.2",
        "--param",
        "m=2",
        "--param",
        "n=1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["passed"] == true));
}

#[test]
fn usage_and_domain_errors() {
    for args in [
        &["ellint", "K", "--k", "1.5"][..],
        &["agm", "--p", "0", "--q", "1"],
        &["check", "landen-theorem", "--m", "1", "--n", "2", "--t", "0.1"],
        &["table", "--op", "nope", "--sweep", "k", "--from", "0", "--to", "1", "--step", "0.5"],
        &["frobnicate"],
    ] {
        let o = rectify(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn construct_svg_points_satisfy_their_equations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("landen.svg");
    let o = rectify(&["construct", "--m", "2", "--n", "1", "--t", "0.5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml") && svg.contains(r#"version="1.1""#));
    let fig = parse_figure(&svg);
    assert_eq!(fig.points.len(), 10);
    let (what, defect) = worst_defect(&fig);
    assert!(defect < 1e-9, "{what}: {defect:e}");
    assert!((fig.p - 0.75f64.sqrt()).abs() < 1e-15);

    // byte-stable output, identical on stdout
    let again = rectify(&["construct", "--m", "2", "--n", "1", "--t", "0.5", "--out", "-"]);
    assert_eq!(stdout(&again), svg);
}

#[test]
fn construct_across_the_tangent_range() {
    for (m, n) in [(2.0, 1.0), (5.0, 0.5), (1.1, 1.0)] {
        for frac in [0.0, 0.01, 0.3, 0.9, 0.999] {
            let t = frac * (m - n);
            let o = rectify(&[
                "construct",
                "--m",
                &m.to_string(),
                "--n",
                &n.to_string(),
                "--t",
                &t.to_string(),
                "--out",
                "-",
            ]);
            assert_eq!(o.status.code(), Some(0), "{m} {n} {t}: {}", String::from_utf8_lossy(&o.stderr));
            let fig = parse_figure(&stdout(&o));
            let (what, defect) = worst_defect(&fig);
            assert!(defect < 1e-9, "({m}, {n}, {t}) {what}: {defect:e}");
        }
    }
    let f = parse_figure(&stdout(&rectify(&["construct", "--m", "2", "--n", "1", "--t", "0", "--out", "-"])));
    assert_eq!(f.points["F"], f.points["A"]);
}

#[test]
fn construct_rejects_unrepresentable_tangents() {
    for t in ["1", "1.5", "0.99999999999"] {
        let o = rectify(&["construct", "--m", "2", "--n", "1", "--t", t, "--out", "-"]);
        assert_eq!(o.status.code(), Some(2), "t = {t}");
        assert!(o.stdout.is_empty());
    }
}
