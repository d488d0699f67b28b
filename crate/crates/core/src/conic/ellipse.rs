use std::f64::consts::FRAC_PI_2;

use super::{Ellipse, LandenPair};
use crate::elliptic::{incomplete_e, Amplitude, Modulus};
use crate::error::{finite, Error, Result};
use crate::quad::{integrate_nodes, Node, Singularity};
use crate::tolerance::Tolerance;

fn check_abscissa(e: &Ellipse, x: f64) -> Result<f64> {
    finite("x", x)?;
    if !(0.0..=e.a).contains(&x) {
        return Err(Error::domain(format!("abscissa must lie in [0, a = {}], got {x}", e.a)));
    }
    Ok(x)
}

/// Length of the tangent segment between the point with abscissa `x` and the foot of
/// the perpendicular from the centre: `t = g x sqrt((a² - x²)/(a² - g x²))`.
pub fn ellipse_tangent_length(e: &Ellipse, x: f64) -> Result<f64> {
    let x = check_abscissa(e, x)?;
    if e.a < e.b {
        return Err(Error::domain("tangent length is defined with the major axis along x"));
    }
    let (a, g) = (e.a, e.g());
    Ok(g * x * ((a - x) * (a + x) / (a * a - g * x * x)).sqrt())
}

/// The two abscissae on ellipse `(m, n)` with tangent length `t`, smaller first.
///
/// They are the roots of `2g x² = t² + g m² ∓ sqrt(((m-n)² - t²)((m+n)² - t²))`;
/// the smaller one is taken from the product of the roots to avoid cancellation.
pub fn abscissae_from_tangent(pair: &LandenPair, t: f64) -> Result<(f64, f64)> {
    let t = pair.check_tangent(t)?;
    let (m, n) = (pair.m, pair.n);
    let g = pair.ellipse2().g();
    let lo = (m - n - t) * (m - n + t);
    let hi = (m + n - t) * (m + n + t);
    let root = (lo * hi).max(0.0).sqrt();
    let plus_sq = (t * t + g * m * m + root) / (2.0 * g);
    let x_plus = plus_sq.sqrt().min(m);
    let x_minus = (t * m / (g * x_plus)).min(x_plus);
    Ok((x_minus, x_plus))
}

/// Arc from `x0` to `x1` measured along the quadrant that starts at the co-vertex
/// `(0, b)`, as a difference of incomplete integrals of the second kind.
pub fn ellipse_arc(e: &Ellipse, x0: f64, x1: f64) -> Result<f64> {
    let (x0, x1) = ordered(e, x0, x1)?;
    if x0 == x1 {
        return Ok(0.0);
    }
    let tol = Tolerance::quadrature();
    let theta = |x: f64| (x / e.a).min(1.0).asin();
    if e.a >= e.b {
        // x = a sin θ, ds = a sqrt(1 - k² sin²θ) dθ
        let k = Modulus::from_complement(e.b / e.a)?;
        let lo = incomplete_e(Amplitude::new(theta(x0))?, k, &tol)?;
        let hi = incomplete_e(Amplitude::new(theta(x1))?, k, &tol)?;
        Ok(e.a * (hi - lo))
    } else {
        // ds = b sqrt(1 - k² cos²θ) dθ, k² = 1 - a²/b²
        let k = Modulus::from_complement(e.a / e.b)?;
        let co = |x: f64| Amplitude::new((FRAC_PI_2 - theta(x)).max(0.0));
        let lo = incomplete_e(co(x1)?, k, &tol)?;
        let hi = incomplete_e(co(x0)?, k, &tol)?;
        Ok(e.b * (hi - lo))
    }
}

/// The same arc by quadrature of `sqrt((a² - g x²)/(a² - x²))`.
pub fn ellipse_arc_quadrature(e: &Ellipse, x0: f64, x1: f64) -> Result<f64> {
    let (x0, x1) = ordered(e, x0, x1)?;
    if x0 == x1 {
        return Ok(0.0);
    }
    let (a, g) = (e.a, e.g());
    let gap = a - x1;
    integrate_nodes(
        |n: Node| {
            let x = n.x;
            ((a * a - g * x * x) / ((gap + n.to_hi) * (a + x))).sqrt()
        },
        x0,
        x1,
        &Tolerance::quadrature(),
        Singularity::Hi,
    )?
    .converged_value()
}

fn ordered(e: &Ellipse, x0: f64, x1: f64) -> Result<(f64, f64)> {
    let (x0, x1) = (check_abscissa(e, x0)?, check_abscissa(e, x1)?);
    if x0 > x1 {
        return Err(Error::domain(format!("need x0 <= x1, got {x0} > {x1}")));
    }
    Ok((x0, x1))
}
