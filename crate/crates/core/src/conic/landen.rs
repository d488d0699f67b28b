use super::{
    abscissae_from_tangent, ellipse_arc_quadrature, hyperbola_arc_pedal, hyperbola_pedal_point, ExcessBreakdown,
    LandenPair,
};
use crate::elliptic::{complete_e, Modulus};
use crate::error::{Error, Result};
use crate::quad::{integrate_nodes, Node, Singularity};
use crate::tolerance::Tolerance;
use crate::transform::ResidualReport;

/// `η₁(t) = ∫₀ᵗ sqrt(((m+n)² - τ²) / ((m-n)² - τ²)) dτ`.
fn eta1(pair: &LandenPair, t: f64) -> Result<f64> {
    if t == 0.0 {
        return Ok(0.0);
    }
    let (d, s) = (pair.m - pair.n, pair.m + pair.n);
    let gap = d - t;
    integrate_nodes(
        |n: Node| {
            let tau = n.x;
            ((s - tau) * (s + tau) / ((gap + n.to_hi) * (d + tau))).sqrt()
        },
        0.0,
        t,
        &Tolerance::quadrature(),
        Singularity::Hi,
    )?
    .converged_value()
}

/// Checks `Hyp = t_Hyp + 2t + η₁ - 4η₂` at tangent length `t` on ellipse `(m, n)`.
///
/// The hyperbola point is the one with pedal distance `p = sqrt((m-n)² - t²)`; `η₂`
/// is the arc of ellipse `(m, n)` from the co-vertex to the smaller abscissa with
/// tangent length `t`. Every arc is a quadrature; `S₁`, `S₂` and `L = 2S₂ - S₁` are
/// reported alongside from complete integrals.
pub fn landen_theorem_check(pair: &LandenPair, t: f64) -> Result<(ExcessBreakdown, ResidualReport)> {
    let t = pair.check_tangent(t)?;
    let d = pair.max_tangent();
    if t >= d {
        return Err(Error::domain(format!(
            "tangent length must stay below m - n = {d}; the hyperbola point recedes to infinity"
        )));
    }
    let h = pair.hyperbola();
    let p = ((d - t) * (d + t)).sqrt();
    let mut warnings = pair.tangent_warnings(t);
    warnings.extend(h.pedal_warnings(p));

    let hyp_arc = hyperbola_arc_pedal(&h, p)?;
    let t_hyp = hyperbola_pedal_point(&h, p)?.t;
    let eta1 = eta1(pair, t)?;
    let (x_minus, _) = abscissae_from_tangent(pair, t)?;
    let eta2 = ellipse_arc_quadrature(&pair.ellipse2(), 0.0, x_minus)?;

    let (m, n) = (pair.m, pair.n);
    let tol = Tolerance::iterative();
    let s2 = m * complete_e(Modulus::from_complement(n / m)?, &tol)?;
    let s1 = (m + n) * complete_e(Modulus::from_complement(2.0 * (m * n).sqrt() / (m + n))?, &tol)?;

    let breakdown = ExcessBreakdown { hyp_arc, t_hyp, t, eta1, eta2, s1, s2, limit_l: 2.0 * s2 - s1, warnings };
    let report = ResidualReport::new(
        "landen-theorem",
        &[("m", m), ("n", n), ("t", t)],
        hyp_arc,
        t_hyp + 2.0 * t + eta1 - 4.0 * eta2,
    );
    Ok((breakdown, report))
}

/// Two points of ellipse `(m, n)` sharing tangent length `t`:
/// `arc(co-vertex → x₋) - arc(x₊ → vertex) = t`.
pub fn fagnano_check(pair: &LandenPair, t: f64) -> Result<ResidualReport> {
    let t = pair.check_tangent(t)?;
    let e = pair.ellipse2();
    let (x_minus, x_plus) = abscissae_from_tangent(pair, t)?;
    let near = ellipse_arc_quadrature(&e, 0.0, x_minus)?;
    let far = ellipse_arc_quadrature(&e, x_plus, pair.m)?;
    Ok(ResidualReport::new("fagnano", &[("m", pair.m), ("n", pair.n), ("t", t)], near - far, t))
}
