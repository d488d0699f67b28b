use super::{Hyperbola, PedalPoint};
use crate::error::{finite, Error, Result};
use crate::quad::{integrate, integrate_nodes, Node, Singularity};
use crate::tolerance::Tolerance;

/// `r² = a² - b² + a²b²/p²`, written as `a² + b²(a-p)(a+p)/p²`.
pub fn hyperbola_radius_from_pedal(h: &Hyperbola, p: f64) -> Result<f64> {
    let p = h.check_pedal(p)?;
    let (a, b) = (h.a, h.b);
    let ratio = b / p;
    Ok((a * a + ratio * ratio * (a - p) * (a + p)).sqrt())
}

pub fn hyperbola_pedal_point(h: &Hyperbola, p: f64) -> Result<PedalPoint> {
    let r = hyperbola_radius_from_pedal(h, p)?;
    let (a, b) = (h.a, h.b);
    let t = ((a - p) * (a + p) * (b * b + p * p)).sqrt() / p;
    Ok(PedalPoint { r, p, t })
}

/// The point `(x, y)`, `y >= 0`, of the right branch whose tangent lies at distance `p`
/// from the centre.
///
/// From `1/p² = x²/a⁴ + y²/b⁴` on the curve:
/// `x = a² sqrt(p² + b²) / (p c)`, `y = b² sqrt(a² - p²) / (p c)`, `c = sqrt(a² + b²)`.
pub fn hyperbola_point_from_pedal(h: &Hyperbola, p: f64) -> Result<(f64, f64)> {
    let p = h.check_pedal(p)?;
    let (a, b) = (h.a, h.b);
    let pc = p * h.focal();
    Ok((a * a * p.hypot(b) / pc, b * b * ((a - p) * (a + p)).sqrt() / pc))
}

/// Arc from the vertex to the point with pedal distance `p_lo`, integrated in the
/// frame rotated so that one asymptote becomes an axis.
pub fn hyperbola_arc(h: &Hyperbola, p_lo: f64) -> Result<f64> {
    let p = h.check_pedal(p_lo)?;
    let (a, b) = (h.a, h.b);
    if p == a {
        return Ok(0.0);
    }
    let c = h.focal();
    let (c2, ab) = (c * c, a * b);
    let diff = (a - b) * (a + b);
    let lo = ab * p / (a * p.hypot(b) + b * ((a - p) * (a + p)).sqrt());
    let hi = ab / c;
    integrate(
        |x| {
            let x2 = x * x;
            (c2 * c2 * x2 * x2 - 2.0 * ab * ab * diff * x2 + ab * ab * ab * ab).sqrt() / (2.0 * ab * x2)
        },
        lo,
        hi,
        &Tolerance::quadrature(),
        Singularity::None,
    )?
    .converged_value()
}

/// The same arc in pedal form, `∫_p^a a²b² dq / (q² sqrt((a²-q²)(b²+q²)))`.
pub fn hyperbola_arc_pedal(h: &Hyperbola, p_lo: f64) -> Result<f64> {
    let p = h.check_pedal(p_lo)?;
    let (a, b) = (h.a, h.b);
    if p == a {
        return Ok(0.0);
    }
    let num = a * a * b * b;
    integrate_nodes(
        |n: Node| {
            let q = n.x;
            num / (q * q * (n.to_hi * (a + q) * (b * b + q * q)).sqrt())
        },
        p,
        a,
        &Tolerance::quadrature(),
        Singularity::Hi,
    )?
    .converged_value()
}

/// `u = a/x` of the point with pedal distance `p`.
pub fn simpson_parameter(h: &Hyperbola, p: f64) -> Result<f64> {
    let p = h.check_pedal(p)?;
    Ok((p * h.focal() / (h.a * p.hypot(h.b))).min(1.0))
}

/// Arc between `x = a/u1` and `x = a/u0` in the reciprocal abscissa `u = a/x`:
/// `ds = (a/δ) sqrt(1 - δ²u²) / (u² sqrt(1 - u²)) du`, `δ = a / sqrt(a² + b²)`.
pub fn simpson_arc(h: &Hyperbola, u0: f64, u1: f64) -> Result<f64> {
    finite("u0", u0)?;
    finite("u1", u1)?;
    if u0 <= 0.0 {
        return Err(Error::domain(format!("u0 must be positive, the pole at u = 0 is not integrable; got {u0}")));
    }
    if !(u0 <= u1 && u1 <= 1.0) {
        return Err(Error::domain(format!("need 0 < u0 <= u1 <= 1, got u0 = {u0}, u1 = {u1}")));
    }
    if u0 == u1 {
        return Ok(0.0);
    }
    let delta = h.modulus();
    let scale = h.focal();
    let gap = 1.0 - u1;
    integrate_nodes(
        |n: Node| {
            let u = n.x;
            let du = delta * u;
            scale * ((1.0 - du) * (1.0 + du)).sqrt() / (u * u * ((gap + n.to_hi) * (1.0 + u)).sqrt())
        },
        u0,
        u1,
        &Tolerance::quadrature(),
        Singularity::Hi,
    )?
    .converged_value()
}

/// Tangent segment minus arc, both measured from the vertex.
pub fn excess_finite(h: &Hyperbola, p: f64) -> Result<f64> {
    let t = hyperbola_pedal_point(h, p)?.t;
    Ok(t - hyperbola_arc(h, p)?)
}

/// `dΔ/dp = -p² / sqrt((a²-p²)(b²+p²))`.
pub fn maclaurin_excess_integrand(h: &Hyperbola, p: f64) -> Result<f64> {
    let p = h.check_pedal(p)?;
    if p == h.a {
        return Err(Error::domain("the excess integrand is singular at the vertex p = a"));
    }
    let (a, b) = (h.a, h.b);
    Ok(-p * p / ((a - p) * (a + p) * (b * b + p * p)).sqrt())
}
