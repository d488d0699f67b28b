//! Landen and Lagrange transformations and the residual checks built on them.
//!
//! One AGM step acts three ways at once:
//!
//! * on the modulus, `k ↦ k̂ = 2√k/(1+k)`;
//! * on the amplitude, `sin(2φ̂ - φ) = k sin φ`;
//! * on the coefficients of `dy / sqrt((1-p²y²)(1-q²y²))`, `(p, q) ↦ ((p+q)/2, √(pq))`,
//!   with the upper limit moved to `s(x, p, q)`.
//!
//! Every `check_*` function evaluates both sides of one of these identities and
//! reports them together with their difference.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::elliptic::{complete_e, complete_k, incomplete_f, Amplitude, Modulus};
use crate::error::{finite, Error, Result};
use crate::quad::{integrate, integrate_nodes, Node, Singularity};
use crate::tolerance::Tolerance;

/// A modulus and its image under one ascending step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModulusPair {
    pub k: Modulus,
    pub k_hat: Modulus,
}

impl ModulusPair {
    pub fn from_lower(k: Modulus) -> Self {
        ModulusPair { k, k_hat: k.ascend() }
    }

    pub fn from_upper(k_hat: Modulus) -> Self {
        ModulusPair { k: k_hat.descend(), k_hat }
    }
}

/// Coefficients `(p, q)` of the Lagrange form and their arithmetic/geometric means.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LagrangeParams {
    pub p: f64,
    pub q: f64,
    pub p1: f64,
    pub q1: f64,
}

impl LagrangeParams {
    /// Requires `0 < q <= p`; `q == p` is the degenerate case where nothing moves.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        finite("p", p)?;
        finite("q", q)?;
        if !(q > 0.0 && q <= p) {
            return Err(Error::domain(format!("need 0 < q <= p, got p = {p}, q = {q}")));
        }
        Ok(LagrangeParams { p, q, p1: 0.5 * (p + q), q1: (p * q).sqrt() })
    }

    /// The next step of the chain, built from `(p1, q1)`.
    pub fn next(&self) -> Self {
        LagrangeParams::new(self.p1, self.q1.min(self.p1)).expect("means of a valid pair are valid")
    }

    /// Recovers `(p, q)` from `(p1, q1)` alone: `p1 ± sqrt(p1² - q1²)`.
    pub fn recovered(&self) -> (f64, f64) {
        let d = ((self.p1 - self.q1) * (self.p1 + self.q1)).max(0.0).sqrt();
        (self.p1 + d, self.p1 - d)
    }
}

/// Both sides of a numerical identity and their absolute difference.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub name: String,
    pub inputs: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

impl ResidualReport {
    pub fn new(name: &str, inputs: &[(&str, f64)], lhs: f64, rhs: f64) -> Self {
        ResidualReport {
            name: name.to_owned(),
            inputs: inputs.iter().map(|&(k, v)| (k.to_owned(), v)).collect(),
            lhs,
            rhs,
            residual: (lhs - rhs).abs(),
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.residual <= tol
    }
}

pub fn modulus_ascend(k: Modulus) -> Modulus {
    k.ascend()
}

pub fn modulus_descend(k_hat: Modulus) -> Modulus {
    k_hat.descend()
}

/// Lower amplitude `φ` from `φ̂`: `tan φ = sin 2φ̂ / (k + cos 2φ̂)`.
///
/// `φ` stays in `[0, π/2]` exactly while `φ̂ <= π/4 + asin(k)/2`; larger `φ̂`
/// would need `φ > π/2` and are rejected.
pub fn amplitude_map(phi_hat: Amplitude, k: Modulus) -> Result<Amplitude> {
    let k = below_one(k)?;
    let (s, c) = (2.0 * phi_hat.value()).sin_cos();
    let phi = s.atan2(k + c);
    if phi > FRAC_PI_2 {
        return Err(Error::domain(format!(
            "amplitude {} maps beyond pi/2 at modulus {k}; the limit is {}",
            phi_hat.value(),
            complete_amplitude(k)
        )));
    }
    Amplitude::new(phi.max(0.0))
}

/// Inverse of [`amplitude_map`]: `φ̂ = (φ + asin(k sin φ)) / 2`.
pub fn amplitude_inverse(phi: Amplitude, k: Modulus) -> Result<Amplitude> {
    let k = below_one(k)?;
    let phi = phi.value();
    let phi_hat = 0.5 * (phi + (k * phi.sin()).asin());
    Amplitude::new(phi_hat.min(FRAC_PI_2))
}

/// `π/4 + asin(k)/2`, the `φ̂` that maps to `φ = π/2`.
pub fn complete_amplitude(k: f64) -> f64 {
    0.5 * (FRAC_PI_2 + k.asin())
}

/// `y = y1 sqrt((1 - p1²y1²) / (1 - q1²y1²))`.
pub fn lagrange_substitution(y1: f64, params: &LagrangeParams) -> Result<f64> {
    finite("y1", y1)?;
    let (p1, q1) = (params.p1, params.q1);
    if (p1 * y1).abs() >= 1.0 {
        return Err(Error::domain(format!("need |y1| < 1/p1 = {}, got {y1}", 1.0 / p1)));
    }
    Ok(y1 * ((1.0 - p1 * y1) * (1.0 + p1 * y1) / ((1.0 - q1 * y1) * (1.0 + q1 * y1))).sqrt())
}

/// The transformed upper limit `s(x, p, q)`, written in the form
/// `√2 x / sqrt(1 + pq x² + sqrt((1-p²x²)(1-q²x²)))` that avoids cancellation at small `x`.
pub fn upper_limit(x: f64, params: &LagrangeParams) -> Result<f64> {
    finite("x", x)?;
    let (p, q) = (params.p, params.q);
    if x < 0.0 || p * x > 1.0 {
        return Err(Error::domain(format!("need 0 <= x <= 1/p = {}, got {x}", 1.0 / p)));
    }
    let root = ((1.0 - p * x) * (1.0 + p * x) * (1.0 - q * x) * (1.0 + q * x)).max(0.0).sqrt();
    Ok(std::f64::consts::SQRT_2 * x / (1.0 + p * q * x * x + root).sqrt())
}

fn below_one(k: Modulus) -> Result<f64> {
    if k.value() >= 1.0 {
        Err(Error::domain("modulus must be below 1"))
    } else {
        Ok(k.value())
    }
}

/// `∫₀^{sin φ} dz / sqrt((1-z²)(1-k²z²))` by quadrature.
fn lagrange_form_f(phi: f64, k: f64, tol: &Tolerance) -> Result<f64> {
    let (top, c) = phi.sin_cos();
    // 1 - sin φ without cancellation near π/2
    let gap = c * c / (1.0 + top);
    integrate_nodes(
        |n: Node| {
            let one_minus = gap + n.to_hi;
            1.0 / (one_minus * (1.0 + n.x) * (1.0 - k * n.x) * (1.0 + k * n.x)).sqrt()
        },
        0.0,
        top,
        tol,
        Singularity::Hi,
    )?
    .converged_value()
}

/// `∫₀^{π/2} sqrt(1 - k² sin²θ) dθ` by quadrature.
fn quadrature_e(k: f64, tol: &Tolerance) -> Result<f64> {
    integrate(
        |t| {
            let ks = k * t.sin();
            ((1.0 - ks) * (1.0 + ks)).max(0.0).sqrt()
        },
        0.0,
        FRAC_PI_2,
        tol,
        Singularity::None,
    )?
    .converged_value()
}

fn gleichung(phi: Amplitude, k: Modulus, steps: usize, name: &str) -> Result<ResidualReport> {
    let tol = Tolerance::strict_quadrature();
    let kernel = Tolerance::iterative();
    below_one(k)?;
    let lhs = lagrange_form_f(phi.value(), k.value(), &tol)?;
    let (mut amp, mut modulus, mut factor) = (phi, k, 1.0);
    for _ in 0..steps {
        amp = amplitude_inverse(amp, modulus)?;
        factor *= 2.0 / (1.0 + modulus.value());
        modulus = modulus.ascend();
    }
    if modulus.value() >= 1.0 {
        return Err(Error::domain("ascended modulus rounds to 1"));
    }
    let rhs = factor * incomplete_f(amp, modulus, &kernel)?;
    Ok(ResidualReport::new(name, &[("phi", phi.value()), ("k", k.value())], lhs, rhs))
}

/// `F(φ, k) = 2/(1+k) F(φ̂, k̂)`: the left side by quadrature of the algebraic
/// form, the right side by the descending kernel at the ascended pair.
pub fn check_gleichung(phi: Amplitude, k: Modulus) -> Result<ResidualReport> {
    gleichung(phi, k, 1, "gleichung")
}

/// Two ascending steps, `F(φ, k) = 2/(1+k) · 2/(1+k̂) · F(φ̂̂, k̂̂)`.
pub fn check_gleichung_chained(phi: Amplitude, k: Modulus) -> Result<ResidualReport> {
    gleichung(phi, k, 2, "gleichung-chained")
}

/// `E(k) = (1+k)/2 E(k̂) + (1-k²)/2 K(k)`, left side by quadrature.
pub fn check_borwein(k: Modulus) -> Result<ResidualReport> {
    let kv = below_one(k)?;
    let kernel = Tolerance::iterative();
    let lhs = quadrature_e(kv, &Tolerance::strict_quadrature())?;
    let kp = k.complement();
    let rhs = 0.5 * (1.0 + kv) * complete_e(k.ascend(), &kernel)? + 0.5 * kp * kp * complete_k(k, &kernel)?;
    Ok(ResidualReport::new("borwein", &[("k", kv)], lhs, rhs))
}

/// `∫₀^x dy / sqrt((1-p²y²)(1-q²y²))` by quadrature; `y = 1/p` is treated as singular.
fn lagrange_form(x: f64, p: f64, q: f64, tol: &Tolerance) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    let gap = (1.0 - p * x).max(0.0);
    integrate_nodes(
        |n: Node| {
            let one_minus = gap + p * n.to_hi;
            1.0 / (one_minus * (1.0 + p * n.x) * (1.0 - q * n.x) * (1.0 + q * n.x)).sqrt()
        },
        0.0,
        x,
        tol,
        Singularity::Hi,
    )?
    .converged_value()
}

fn agm_invariance(x: f64, p: f64, q: f64, steps: usize, name: &str) -> Result<ResidualReport> {
    finite("x", x)?;
    let mut params = LagrangeParams::new(p, q)?;
    if x < 0.0 || p * x > 1.0 {
        return Err(Error::domain(format!("need 0 <= x <= 1/p = {}, got {x}", 1.0 / p)));
    }
    let tol = Tolerance::strict_quadrature();
    let lhs = lagrange_form(x, p, q, &tol)?;
    let mut limit = x;
    for step in 0..steps {
        if step > 0 {
            params = params.next();
        }
        limit = upper_limit(limit, &params)?;
    }
    let rhs = lagrange_form(limit, params.p1, params.q1, &tol)?;
    Ok(ResidualReport::new(name, &[("x", x), ("p", p), ("q", q)], lhs, rhs))
}

/// `∫₀^x dy/R(p, q; y) = ∫₀^{s(x,p,q)} dy₁/R(p₁, q₁; y₁)`, both sides by quadrature.
pub fn check_agm_invariance(x: f64, p: f64, q: f64) -> Result<ResidualReport> {
    agm_invariance(x, p, q, 1, "agm-invariance")
}

/// The same invariance carried through two coefficient steps.
pub fn check_agm_invariance_chained(x: f64, p: f64, q: f64) -> Result<ResidualReport> {
    agm_invariance(x, p, q, 2, "agm-invariance-chained")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, PI};

    fn m(k: f64) -> Modulus {
        Modulus::new(k).unwrap()
    }

    fn a(phi: f64) -> Amplitude {
        Amplitude::new(phi).unwrap()
    }

    #[test]
    fn ascend_examples() {
        assert_eq!(modulus_ascend(m(0.0)).value(), 0.0);
        assert_eq!(modulus_ascend(m(1.0)).value(), 1.0);
        assert_eq!(modulus_ascend(m(1.0 / 9.0)).value(), 0.6);
        assert!((modulus_descend(m(0.6)).value() - 1.0 / 9.0).abs() < 1e-16);
        let pair = ModulusPair::from_lower(m(0.6));
        assert!((pair.k_hat.value() - 0.968_245_836_551_854).abs() < 1e-15);
        assert!((ModulusPair::from_upper(pair.k_hat).k.value() - 0.6).abs() < 1e-15);
    }

    #[test]
    fn amplitude_map_examples() {
        assert_eq!(amplitude_map(a(0.0), m(0.3)).unwrap().value(), 0.0);
        let phi = amplitude_map(a(FRAC_PI_4), m(0.5)).unwrap().value();
        assert!((phi - 2f64.atan()).abs() < 1e-15);
        for &k in &[0.0, 0.2, 0.6, 0.95] {
            let phi_hat = complete_amplitude(k);
            let phi = amplitude_map(a(phi_hat), m(k)).unwrap().value();
            assert!((phi - FRAC_PI_2).abs() < 1e-15, "k={k}: {phi}");
        }
    }

    #[test]
    fn amplitude_map_rejects_past_quarter_turn() {
        assert!(amplitude_map(a(FRAC_PI_2), m(0.5)).is_err());
        assert!(amplitude_map(a(0.3), m(1.0)).is_err());
    }

    #[test]
    fn amplitude_inverse_round_trip() {
        for i in 0..=16 {
            let phi = FRAC_PI_2 * i as f64 / 16.0;
            for &k in &[0.0, 0.3, 0.9, 0.999] {
                let hat = amplitude_inverse(a(phi), m(k)).unwrap();
                let back = amplitude_map(hat, m(k)).unwrap().value();
                assert!((back - phi).abs() < 1e-14, "phi={phi} k={k}");
                let r = (2.0 * hat.value() - back).sin() - k * back.sin();
                assert!(r.abs() < 1e-13);
            }
        }
    }

    #[test]
    fn lagrange_params() {
        let lp = LagrangeParams::new(4.0, 2.0).unwrap();
        assert_eq!(lp.p1, 3.0);
        assert!((lp.q1 - 8f64.sqrt()).abs() < 1e-15);
        let (p, q) = lp.recovered();
        assert!((p - 4.0).abs() < 4e-14 && (q - 2.0).abs() < 2e-14);
        assert!(LagrangeParams::new(1.0, 2.0).is_err());
        assert!(LagrangeParams::new(1.0, 0.0).is_err());
        assert!(LagrangeParams::new(1.0, 1.0).is_ok());
    }

    #[test]
    fn upper_limit_examples() {
        let lp = LagrangeParams::new(4.0, 2.0).unwrap();
        assert_eq!(upper_limit(0.0, &lp).unwrap(), 0.0);
        assert!((upper_limit(0.25, &lp).unwrap() - (2.0f64 / 24.0).sqrt()).abs() < 1e-15);
        let one = LagrangeParams::new(1.0, 1.0).unwrap();
        assert!((upper_limit(1.0, &one).unwrap() - 1.0).abs() < 1e-15);
        assert!(upper_limit(0.3, &lp).is_err());
        assert!(upper_limit(-0.1, &lp).is_err());
    }

    #[test]
    fn substitution_reaches_maximum_at_upper_limit() {
        let lp = LagrangeParams::new(4.0, 2.0).unwrap();
        assert_eq!(lagrange_substitution(0.0, &lp).unwrap(), 0.0);
        let s = upper_limit(1.0 / lp.p, &lp).unwrap();
        let y = lagrange_substitution(s, &lp).unwrap();
        assert!((y - 0.25).abs() < 1e-15);
        // crude scan: nothing exceeds 1/p
        let top = (0..1000).map(|i| lagrange_substitution(i as f64 / 1000.0 / lp.p1, &lp).unwrap()).fold(0.0, f64::max);
        assert!(top <= 0.25 + 1e-15);
        assert!(lagrange_substitution(1.0 / 3.0, &lp).is_err());
    }

    #[test]
    fn substitution_inverts_upper_limit() {
        let lp = LagrangeParams::new(1.3, 0.4).unwrap();
        for i in 0..=10 {
            let x = i as f64 / 10.0 / lp.p;
            let s = upper_limit(x, &lp).unwrap();
            assert!((lagrange_substitution(s, &lp).unwrap() - x).abs() < 1e-14, "x={x}");
        }
    }

    #[test]
    fn gleichung_examples() {
        let r = check_gleichung(a(FRAC_PI_2), m(0.6)).unwrap();
        assert!(r.residual < 1e-12, "{r:?}");
        let kk = complete_k(m(0.6), &Tolerance::iterative()).unwrap();
        assert!((r.lhs - kk).abs() < 1e-12);
        let r = check_gleichung(a(0.7), m(0.0)).unwrap();
        assert!(r.residual < 1e-15 && (r.lhs - 0.7).abs() < 1e-14);
        let r = check_gleichung(a(0.0), m(0.5)).unwrap();
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
        let r = check_gleichung_chained(a(1.2), m(0.8)).unwrap();
        assert!(r.residual < 1e-11, "{r:?}");
    }

    #[test]
    fn borwein_examples() {
        let r = check_borwein(m(0.0)).unwrap();
        assert!(r.residual < 1e-15);
        assert!((r.lhs - PI / 2.0).abs() < 1e-15);
        assert!(check_borwein(m(1.0 / 9.0)).unwrap().residual < 1e-12);
        assert!(check_borwein(m(0.95)).unwrap().residual < 1e-11);
        assert!(check_borwein(m(1.0)).is_err());
    }

    #[test]
    fn agm_invariance_examples() {
        let r = check_agm_invariance(0.0, 1.0, 0.5).unwrap();
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
        let r = check_agm_invariance(1.0, 1.0, 0.5).unwrap();
        assert!(r.residual < 1e-10, "{r:?}");
        let k = complete_k(m(0.5), &Tolerance::iterative()).unwrap();
        assert!((r.lhs - k).abs() < 1e-12);
        assert!(check_agm_invariance(0.25, 2.0, 1.0).unwrap().residual < 1e-10);
        assert!(check_agm_invariance_chained(1.0, 1.0, 0.5).unwrap().residual < 1e-10);
        assert!(check_agm_invariance(0.6, 2.0, 1.0).is_err());
    }
}
