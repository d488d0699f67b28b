//! Name-based dispatch from a parameter map to a library operation.

use crate::agm::agm;
use crate::conic::{self, Ellipse, Hyperbola, LandenPair};
use crate::elliptic::{self, Amplitude, Modulus, SeriesKind};
use crate::error::{Error, Result};
use crate::lemniscate::lemniscate;
use crate::tolerance::Tolerance;
use crate::transform::{self, LagrangeParams, ResidualReport};

use super::report::{Params, RunReport};

/// Every operation name accepted by [`evaluate`], with its parameters.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("agm", "p q [tol]"),
    ("ellint-K", "k"),
    ("ellint-E", "k"),
    ("ellint-F", "k phi"),
    ("ellint-Einc", "k phi"),
    ("ellint-B", "k"),
    ("series-K", "k terms"),
    ("series-E", "k terms"),
    ("lemniscate", "radius"),
    ("modulus-ascend", "k"),
    ("modulus-descend", "k"),
    ("amplitude-map", "phi k"),
    ("amplitude-inverse", "phi k"),
    ("lagrange-substitution", "y1 p q"),
    ("upper-limit", "x p q"),
    ("excess-closed", "a b | m n"),
    ("excess-series", "a b | m n [terms]"),
    ("excess-landen", "a b | m n"),
    ("excess-finite", "a b | m n, p"),
    ("hyperbola-radius", "a b p"),
    ("hyperbola-point", "a b p"),
    ("hyperbola-arc", "a b p"),
    ("simpson-arc", "a b u0 u1"),
    ("maclaurin-integrand", "a b p"),
    ("ellipse-tangent", "a b x"),
    ("ellipse-arc", "a b x0 x1"),
    ("abscissae", "m n t"),
    ("semiaxes-to-pair", "a b"),
    ("pair-to-semiaxes", "m n"),
    ("gleichung", "phi k [tol]"),
    ("gleichung-chained", "phi k [tol]"),
    ("borwein", "k [tol]"),
    ("agm-invariance", "x p q [tol]"),
    ("agm-invariance-chained", "x p q [tol]"),
    ("landen-theorem", "m n t [tol]"),
    ("fagnano", "m n t [tol]"),
];

/// Pass threshold of a residual check when `--tol` is not given.
pub fn default_check_tolerance(op: &str) -> Option<f64> {
    Some(match op {
        "gleichung" | "borwein" => 1e-12,
        "gleichung-chained" => 1e-11,
        "agm-invariance" | "agm-invariance-chained" => 1e-10,
        "landen-theorem" | "fagnano" => 1e-9,
        _ => return None,
    })
}

fn modulus(p: &Params) -> Result<Modulus> {
    Modulus::new(p.get("k")?)
}

fn amplitude(p: &Params) -> Result<Amplitude> {
    Amplitude::new(p.get("phi")?)
}

fn hyperbola(p: &Params) -> Result<Hyperbola> {
    match (p.has("a") || p.has("b"), p.has("m") || p.has("n")) {
        (true, true) => Err(Error::domain("give either --a/--b or --m/--n, not both")),
        (false, true) => Ok(pair(p)?.hyperbola()),
        _ => Hyperbola::new(p.get("a")?, p.get("b")?),
    }
}

fn pair(p: &Params) -> Result<LandenPair> {
    match (p.has("a") || p.has("b"), p.has("m") || p.has("n")) {
        (true, true) => Err(Error::domain("give either --a/--b or --m/--n, not both")),
        (true, false) => LandenPair::from_semiaxes(p.get("a")?, p.get("b")?),
        _ => LandenPair::new(p.get("m")?, p.get("n")?),
    }
}

fn lagrange(p: &Params) -> Result<LagrangeParams> {
    LagrangeParams::new(p.get("p")?, p.get("q")?)
}

fn check(op: &str, params: &Params, r: ResidualReport) -> Result<RunReport> {
    let tol = match params.opt("tol") {
        Some(t) if !(t >= 0.0 && t.is_finite()) => {
            return Err(Error::domain(format!("--tol must be a non-negative number, got {t}")))
        }
        Some(t) => t,
        None => default_check_tolerance(op).expect("every check has a default"),
    };
    let mut report = RunReport::new(op, params).value("lhs", r.lhs).value("rhs", r.rhs);
    report.residual = Some(r.residual);
    report.tolerance = Some(tol);
    report.passed = Some(r.passes(tol));
    Ok(report)
}

pub fn evaluate(op: &str, p: &Params) -> Result<RunReport> {
    let it = Tolerance::iterative();
    let quad = Tolerance::quadrature();
    let report = RunReport::new(op, p);
    Ok(match op {
        "agm" => {
            let tol = match p.opt("tol") {
                Some(t) => Tolerance::new(t, 0.0, it.max_iter)?,
                None => it,
            };
            let s = agm(p.get("p")?, p.get("q")?, &tol)?;
            let (pn, qn) = *s.iterates.last().unwrap();
            let mut r = report.value("limit", s.limit).value("gap", pn - qn);
            r.iterations = Some(s.iterations);
            r.iterates = Some(s.iterates);
            if s.swapped {
                r.warnings.push("inputs-swapped".to_owned());
            }
            r
        }
        "ellint-K" => report.value("value", elliptic::complete_k(modulus(p)?, &it)?),
        "ellint-E" => report.value("value", elliptic::complete_e(modulus(p)?, &it)?),
        "ellint-B" => report.value("value", elliptic::complete_b(modulus(p)?, &it)?),
        "ellint-F" => report.value("value", elliptic::incomplete_f(amplitude(p)?, modulus(p)?, &it)?),
        "ellint-Einc" => report.value("value", elliptic::incomplete_e(amplitude(p)?, modulus(p)?, &quad)?),
        "series-K" | "series-E" => {
            let kind = if op == "series-K" { SeriesKind::K } else { SeriesKind::E };
            let (k, n) = (modulus(p)?, p.count("terms")?);
            report
                .value("value", elliptic::series_ke(kind, k, n)?)
                .value("bound", elliptic::series_truncation_bound(kind, k, n)?)
        }
        "lemniscate" => {
            let l = lemniscate(p.get("radius")?)?;
            report
                .value("quarter_arc", l.quarter_arc)
                .value("full_arc", l.full_arc)
                .value("gauss_constant", l.gauss_constant)
        }
        "modulus-ascend" | "modulus-descend" => {
            let k = modulus(p)?;
            let out = if op == "modulus-ascend" { transform::modulus_ascend(k) } else { transform::modulus_descend(k) };
            report.value("value", out.value()).value("complement", out.complement())
        }
        "amplitude-map" => report.value("value", transform::amplitude_map(amplitude(p)?, modulus(p)?)?.value()),
        "amplitude-inverse" => report.value("value", transform::amplitude_inverse(amplitude(p)?, modulus(p)?)?.value()),
        "lagrange-substitution" => {
            report.value("value", transform::lagrange_substitution(p.get("y1")?, &lagrange(p)?)?)
        }
        "upper-limit" => report.value("value", transform::upper_limit(p.get("x")?, &lagrange(p)?)?),
        "excess-closed" => report.value("value", conic::excess_infinity_closed(&hyperbola(p)?)?),
        "excess-series" => {
            let h = hyperbola(p)?;
            let terms = if p.has("terms") { p.count("terms")? } else { conic::MAX_SERIES_TERMS };
            report
                .value("value", conic::excess_infinity_series(&h, terms)?)
                .value("bound", conic::excess_series_bound(&h, terms))
        }
        "excess-landen" => report.value("value", conic::excess_infinity_landen(&pair(p)?)?),
        "excess-finite" => {
            let h = hyperbola(p)?;
            let pv = p.get("p")?;
            report.value("value", conic::excess_finite(&h, pv)?).warn(h.pedal_warnings(pv))
        }
        "hyperbola-radius" => {
            let h = hyperbola(p)?;
            let pv = p.get("p")?;
            report.value("value", conic::hyperbola_radius_from_pedal(&h, pv)?).warn(h.pedal_warnings(pv))
        }
        "hyperbola-point" => {
            let h = hyperbola(p)?;
            let pv = p.get("p")?;
            let (x, y) = conic::hyperbola_point_from_pedal(&h, pv)?;
            let pt = conic::hyperbola_pedal_point(&h, pv)?;
            report.value("x", x).value("y", y).value("r", pt.r).value("t", pt.t).warn(h.pedal_warnings(pv))
        }
        "hyperbola-arc" => {
            let h = hyperbola(p)?;
            let pv = p.get("p")?;
            report
                .value("value", conic::hyperbola_arc(&h, pv)?)
                .value("pedal_frame", conic::hyperbola_arc_pedal(&h, pv)?)
                .warn(h.pedal_warnings(pv))
        }
        "simpson-arc" => report.value("value", conic::simpson_arc(&hyperbola(p)?, p.get("u0")?, p.get("u1")?)?),
        "maclaurin-integrand" => report.value("value", conic::maclaurin_excess_integrand(&hyperbola(p)?, p.get("p")?)?),
        "ellipse-tangent" => {
            let e = Ellipse::new(p.get("a")?, p.get("b")?)?;
            report.value("value", conic::ellipse_tangent_length(&e, p.get("x")?)?)
        }
        "ellipse-arc" => {
            let e = Ellipse::new(p.get("a")?, p.get("b")?)?;
            let (x0, x1) = (p.get("x0")?, p.get("x1")?);
            report
                .value("value", conic::ellipse_arc(&e, x0, x1)?)
                .value("quadrature", conic::ellipse_arc_quadrature(&e, x0, x1)?)
        }
        "abscissae" => {
            let lp = pair(p)?;
            let t = p.get("t")?;
            let (lo, hi) = conic::abscissae_from_tangent(&lp, t)?;
            report.value("x_minus", lo).value("x_plus", hi).warn(lp.tangent_warnings(t))
        }
        "semiaxes-to-pair" => {
            let lp = conic::semiaxes_to_pair(p.get("a")?, p.get("b")?)?;
            report.value("m", lp.m).value("n", lp.n)
        }
        "pair-to-semiaxes" => {
            let (a, b) = conic::pair_to_semiaxes(&LandenPair::new(p.get("m")?, p.get("n")?)?);
            report.value("a", a).value("b", b)
        }
        "gleichung" => check(op, p, transform::check_gleichung(amplitude(p)?, modulus(p)?)?)?,
        "gleichung-chained" => check(op, p, transform::check_gleichung_chained(amplitude(p)?, modulus(p)?)?)?,
        "borwein" => check(op, p, transform::check_borwein(modulus(p)?)?)?,
        "agm-invariance" => check(op, p, transform::check_agm_invariance(p.get("x")?, p.get("p")?, p.get("q")?)?)?,
        "agm-invariance-chained" => {
            check(op, p, transform::check_agm_invariance_chained(p.get("x")?, p.get("p")?, p.get("q")?)?)?
        }
        "landen-theorem" => {
            let lp = pair(p)?;
            let (b, r) = conic::landen_theorem_check(&lp, p.get("t")?)?;
            check(op, p, r)?
                .value("hyp_arc", b.hyp_arc)
                .value("t_hyp", b.t_hyp)
                .value("eta1", b.eta1)
                .value("eta2", b.eta2)
                .value("s1", b.s1)
                .value("s2", b.s2)
                .value("limit_l", b.limit_l)
                .warn(b.warnings)
        }
        "fagnano" => {
            let lp = pair(p)?;
            let t = p.get("t")?;
            let (lo, hi) = conic::abscissae_from_tangent(&lp, t)?;
            check(op, p, conic::fagnano_check(&lp, t)?)?
                .value("x_minus", lo)
                .value("x_plus", hi)
                .warn(lp.tangent_warnings(t))
        }
        _ => {
            let names: Vec<&str> = OPERATIONS.iter().map(|(n, _)| *n).collect();
            return Err(Error::domain(format!("unknown operation '{op}'; expected one of {}", names.join(", "))));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_operation_dispatches() {
        let p = Params::new()
            .with("p", 0.5)
            .with("q", 0.4)
            .with("k", 0.5)
            .with("phi", 0.5)
            .with("terms", 3.0)
            .with("radius", 1.0)
            .with("y1", 0.1)
            .with("x", 0.5)
            .with("u0", 0.5)
            .with("u1", 1.0)
            .with("x0", 0.0)
            .with("x1", 0.5)
            .with("t", 0.5);
        for (op, _) in OPERATIONS {
            let mut p = p.clone();
            match *op {
                "hyperbola-radius"
                | "hyperbola-point"
                | "hyperbola-arc"
                | "simpson-arc"
                | "maclaurin-integrand"
                | "ellipse-tangent"
                | "ellipse-arc"
                | "semiaxes-to-pair" => {
                    p.set("a", 1.0);
                    p.set("b", 1.0);
                }
                "excess-closed" | "excess-series" | "excess-landen" | "excess-finite" | "abscissae"
                | "pair-to-semiaxes" | "landen-theorem" | "fagnano" => {
                    p.set("m", 2.0);
                    p.set("n", 1.0);
                }
                _ => {}
            }
            let r = evaluate(op, &p).unwrap_or_else(|e| panic!("{op}: {e}"));
            assert!(!r.values.is_empty(), "{op}");
            assert!(r.values.values().all(|v| v.is_finite()), "{op}");
        }
        assert!(evaluate("nope", &p).is_err());
    }

    #[test]
    fn checks_carry_tolerance() {
        let r = evaluate("borwein", &Params::new().with("k", 0.3)).unwrap();
        assert_eq!(r.tolerance, Some(1e-12));
        assert_eq!(r.passed, Some(true));
        let r = evaluate("borwein", &Params::new().with("k", 0.3).with("tol", 0.0)).unwrap();
        assert_eq!(r.tolerance, Some(0.0));
    }

    #[test]
    fn excess_accepts_either_parameterisation() {
        let by_pair = evaluate("excess-closed", &Params::new().with("m", 2.0).with("n", 1.0)).unwrap();
        let by_axes = evaluate("excess-closed", &Params::new().with("a", 1.0).with("b", 8f64.sqrt())).unwrap();
        assert!((by_pair.values["value"] - by_axes.values["value"]).abs() < 1e-14);
        let both = Params::new().with("a", 1.0).with("b", 1.0).with("m", 2.0).with("n", 1.0);
        assert!(evaluate("excess-closed", &both).is_err());
    }
}
