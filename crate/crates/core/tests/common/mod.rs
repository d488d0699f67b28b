//! Helpers shared by the integration targets.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::process::{Command, Output};

use regex::Regex;

pub fn rectify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rectify")).args(args).output().expect("binary runs")
}

/// Every `check` invocation exercised end to end, at default tolerances.
pub const CHECK_INVOCATIONS: &[&[&str]] = &[
    &["check", "gleichung", "--phi", "1.0", "--k", "0.5"],
    &["check", "gleichung", "--phi", "1.0", "--k", "0.5", "--chained"],
    &["check", "borwein", "--k", "0.5"],
    &["check", "agm-invariance", "--x", "0.8", "--p", "1", "--q", "0.6"],
    &["check", "agm-invariance", "--x", "0.8", "--p", "1", "--q", "0.6", "--chained"],
    &["check", "landen-theorem", "--m", "2", "--n", "1", "--t", "0.5"],
    &["check", "fagnano", "--m", "2", "--n", "1", "--t", "0.5"],
];

pub struct Figure {
    pub m: f64,
    pub n: f64,
    pub t: f64,
    pub p: f64,
    pub points: BTreeMap<String, (f64, f64)>,
}

/// Reads the construction parameters and labelled points back out of the SVG text.
pub fn parse_figure(svg: &str) -> Figure {
    let attr = |name: &str| -> f64 {
        let re = Regex::new(&format!(r#"<desc[^>]*\bdata-{name}="([^"]+)""#)).unwrap();
        re.captures(svg).unwrap_or_else(|| panic!("no data-{name}"))[1].parse().unwrap()
    };
    let re = Regex::new(r#"data-label="(\w+)" data-x="([^"]+)" data-y="([^"]+)""#).unwrap();
    let points =
        re.captures_iter(svg).map(|c| (c[1].to_owned(), (c[2].parse().unwrap(), c[3].parse().unwrap()))).collect();
    Figure { m: attr("m"), n: attr("n"), t: attr("t"), p: attr("p"), points }
}

/// Largest defect among the defining equations of the plotted points, scaled by the figure size.
pub fn worst_defect(fig: &Figure) -> (String, f64) {
    let (m, n, t, p) = (fig.m, fig.n, fig.t, fig.p);
    let a = m - n;
    let b = 2.0 * (m * n).sqrt();
    let pt = |l: &str| *fig.points.get(l).unwrap_or_else(|| panic!("point {l} missing"));
    let (s, aa, nn, z, e, q, h, k, f, pp) =
        (pt("S"), pt("A"), pt("N"), pt("Z"), pt("E"), pt("Q"), pt("H"), pt("K"), pt("F"), pt("P"));
    let norm = |u: (f64, f64)| u.0.hypot(u.1);
    let dist = |u: (f64, f64), v: (f64, f64)| (u.0 - v.0).hypot(u.1 - v.1);
    let hyp = |u: (f64, f64)| (u.0 * u.0 / (a * a) - u.1 * u.1 / (b * b) - 1.0) / (u.0 * u.0 / (a * a)).max(1.0);
    let checks = [
        ("S", norm(s)),
        ("A on hyperbola", hyp(aa)),
        ("A on axis", aa.1),
        ("N vertical tangent", nn.0 - a),
        ("N asymptote", nn.1 * a - b * nn.0),
        ("Z", (z.0 - (m + n)).abs() + (z.1 + (m - n)).abs()),
        ("E on ellipse (m, n)", e.0 * e.0 / (m * m) + e.1 * e.1 / (n * n) - 1.0),
        ("Q on tangent at E", q.0 * e.0 / (m * m) + q.1 * e.1 / (n * n) - 1.0),
        ("SQ perpendicular QE", q.0 * (e.0 - q.0) + q.1 * (e.1 - q.1)),
        ("QE = t", dist(q, e) - t),
        ("H", (h.0 - a).abs() + (h.1 + t).abs()),
        ("K on circle about A", dist(k, aa) - t),
        ("K on circle over AS", dist(k, (a / 2.0, 0.0)) - a / 2.0),
        ("SK = p", norm(k) - p),
        ("p from t", p * p + t * t - (m - n) * (m - n)),
        ("F on hyperbola", hyp(f)),
        ("SP = p", norm(pp) - p),
        ("P on tangent at F", pp.0 * f.0 / (a * a) - pp.1 * f.1 / (b * b) - 1.0),
        ("SP perpendicular PF", pp.0 * (f.0 - pp.0) + pp.1 * (f.1 - pp.1)),
    ];
    checks.iter().map(|(l, d)| (l.to_string(), d.abs() / (m + n).max(1.0))).fold((String::new(), 0.0), |acc, c| {
        if c.1 > acc.1 || c.1.is_nan() {
            c
        } else {
            acc
        }
    })
}
