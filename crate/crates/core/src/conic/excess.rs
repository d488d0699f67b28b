use std::f64::consts::PI;

use super::{Hyperbola, LandenPair};
use crate::elliptic::{complete_b, complete_e, Modulus};
use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// Terms accepted by [`excess_infinity_series`].
pub const MAX_SERIES_TERMS: usize = 3;

/// Modulus `x / h` with complement `y / h`, built from whichever side is smaller.
fn modulus_of(x: f64, y: f64, h: f64) -> Result<Modulus> {
    if y < x {
        Modulus::from_complement(y / h)
    } else {
        Modulus::new(x / h)
    }
}

/// `Δ∞ = c E(k) - (b²/c) K(k)`, `c = sqrt(a² + b²)`, `k = a/c`.
///
/// Evaluated as `(a²/c) B(k)` with `B = (E - k'²K)/k²`, the same quantity without
/// the cancellation between the two complete integrals when `a << b`.
pub fn excess_infinity_closed(h: &Hyperbola) -> Result<f64> {
    let c = h.focal();
    let k = modulus_of(h.a, h.b, c)?;
    Ok(h.a * h.a / c * complete_b(k, &Tolerance::iterative())?)
}

/// Coefficient of `(a/b)^{2j}` in `Δ∞ = (π a²/2b) Σ_j c_j (a/b)^{2j}`:
/// `1/2, -3/16, 15/128, -175/2048, ...`.
pub fn maclaurin_coefficient(j: usize) -> f64 {
    (0..j).fold(0.5, |c, i| {
        let i = i as f64;
        c * -(0.5 + i) / (i + 1.0) * (2.0 * i + 3.0) / (2.0 * i + 4.0)
    })
}

/// The first `terms` terms of the small-`a/b` expansion.
pub fn excess_infinity_series(h: &Hyperbola, terms: usize) -> Result<f64> {
    if !(1..=MAX_SERIES_TERMS).contains(&terms) {
        return Err(Error::domain(format!("series terms must be in 1..={MAX_SERIES_TERMS}, got {terms}")));
    }
    let x = (h.a / h.b).powi(2);
    let sum: f64 = (0..terms).map(|j| maclaurin_coefficient(j) * x.powi(j as i32)).sum();
    Ok(PI * h.a * h.a / (2.0 * h.b) * sum)
}

/// Magnitude of the first omitted term after `terms` terms.
pub fn excess_series_bound(h: &Hyperbola, terms: usize) -> f64 {
    let x = (h.a / h.b).powi(2);
    PI * h.a * h.a / (2.0 * h.b) * maclaurin_coefficient(terms).abs() * x.powi(terms as i32)
}

/// `L = 2S₂ - S₁` with the quadrants `S₂ = m E(sqrt(m² - n²)/m)` of ellipse `(m, n)`
/// and `S₁ = (m+n) E((m-n)/(m+n))` of ellipse `(m+n, 2√(mn))`.
pub fn excess_infinity_landen(pair: &LandenPair) -> Result<f64> {
    let (m, n) = (pair.m, pair.n);
    let tol = Tolerance::iterative();
    let k2 = Modulus::from_complement(n / m)?;
    let k1 = modulus_of(m - n, 2.0 * (m * n).sqrt(), m + n)?;
    let s2 = m * complete_e(k2, &tol)?;
    let s1 = (m + n) * complete_e(k1, &tol)?;
    Ok(2.0 * s2 - s1)
}
