//! Hyperbola rectification through its two auxiliary ellipses.
//!
//! The hyperbola `x²/a² - y²/b² = 1` is described in pedal coordinates: `p` is the
//! distance from the centre to the tangent line, running from `a` at the vertex
//! down to `0` along the asymptote. The pair `(m, n)` with `a = m - n`,
//! `b = 2√(mn)` links it to the ellipses `(m+n, 2√(mn))` and `(m, n)`.

mod ellipse;
mod excess;
mod hyperbola;
mod landen;

use serde::{Deserialize, Serialize};

use crate::error::{finite, Error, Result};

pub use ellipse::{abscissae_from_tangent, ellipse_arc, ellipse_arc_quadrature, ellipse_tangent_length};
pub use excess::{
    excess_infinity_closed, excess_infinity_landen, excess_infinity_series, excess_series_bound, maclaurin_coefficient,
    MAX_SERIES_TERMS,
};
pub use hyperbola::{
    excess_finite, hyperbola_arc, hyperbola_arc_pedal, hyperbola_pedal_point, hyperbola_point_from_pedal,
    hyperbola_radius_from_pedal, maclaurin_excess_integrand, simpson_arc, simpson_parameter,
};
pub use landen::{fagnano_check, landen_theorem_check};

/// Pedal distances below this fraction of `a` are accepted but flagged.
pub const PEDAL_GUARD: f64 = 1e-8;
/// Tangent lengths this close (relative to `m - n`) to their maximum are flagged.
pub const TANGENT_GUARD: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Warning {
    /// `p < 1e-8 a`: the point is far out along the asymptote.
    PedalNearAsymptote,
    /// `t` within `1e-8 (m - n)` of its maximum: the two ellipse abscissae merge.
    TangentNearMaximum,
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Warning::PedalNearAsymptote => "pedal-near-asymptote",
            Warning::TangentNearMaximum => "tangent-near-maximum",
        })
    }
}

fn positive(name: &str, v: f64) -> Result<f64> {
    finite(name, v)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(Error::domain(format!("{name} must be positive, got {v}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hyperbola {
    pub a: f64,
    pub b: f64,
}

impl Hyperbola {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        Ok(Hyperbola { a: positive("a", a)?, b: positive("b", b)? })
    }

    /// `sqrt(a² + b²)`.
    pub fn focal(&self) -> f64 {
        self.a.hypot(self.b)
    }

    pub fn eccentricity(&self) -> f64 {
        self.focal() / self.a
    }

    /// `ε = a(1 - e²/2) = (a² - b²) / 2a`.
    pub fn epsilon(&self) -> f64 {
        (self.a - self.b) * (self.a + self.b) / (2.0 * self.a)
    }

    /// `k = a / sqrt(a² + b²)`.
    pub fn modulus(&self) -> f64 {
        self.a / self.focal()
    }

    pub fn check_pedal(&self, p: f64) -> Result<f64> {
        finite("p", p)?;
        if !(p > 0.0 && p <= self.a) {
            return Err(Error::domain(format!("pedal distance must lie in (0, a = {}], got {p}", self.a)));
        }
        Ok(p)
    }

    pub fn pedal_warnings(&self, p: f64) -> Vec<Warning> {
        if p < PEDAL_GUARD * self.a {
            vec![Warning::PedalNearAsymptote]
        } else {
            Vec::new()
        }
    }
}

/// Ellipse with semiaxis `a` along x and `b` along y.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ellipse {
    pub a: f64,
    pub b: f64,
}

impl Ellipse {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        Ok(Ellipse { a: positive("a", a)?, b: positive("b", b)? })
    }

    /// `g = (a² - b²) / a²`, negative when `b > a`.
    pub fn g(&self) -> f64 {
        (self.a - self.b) * (self.a + self.b) / (self.a * self.a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LandenPair {
    pub m: f64,
    pub n: f64,
}

impl LandenPair {
    pub fn new(m: f64, n: f64) -> Result<Self> {
        let (m, n) = (positive("m", m)?, positive("n", n)?);
        if m <= n {
            return Err(Error::domain(format!("need m > n, got m = {m}, n = {n}")));
        }
        Ok(LandenPair { m, n })
    }

    /// `(m, n)` from the hyperbola semiaxes: `m = (c + a)/2`, `n = (c - a)/2`.
    pub fn from_semiaxes(a: f64, b: f64) -> Result<Self> {
        let h = Hyperbola::new(a, b)?;
        let c = h.focal();
        // (c - a)/2 = b² / 2(c + a)
        LandenPair::new(0.5 * (c + a), 0.5 * b * b / (c + a))
    }

    /// `(a, b) = (m - n, 2√(mn))`.
    pub fn semiaxes(&self) -> (f64, f64) {
        (self.m - self.n, 2.0 * (self.m * self.n).sqrt())
    }

    pub fn hyperbola(&self) -> Hyperbola {
        let (a, b) = self.semiaxes();
        Hyperbola { a, b }
    }

    pub fn ellipse1(&self) -> Ellipse {
        Ellipse { a: self.m + self.n, b: 2.0 * (self.m * self.n).sqrt() }
    }

    pub fn ellipse2(&self) -> Ellipse {
        Ellipse { a: self.m, b: self.n }
    }

    /// Largest tangent length on ellipse 2, `m - n`.
    pub fn max_tangent(&self) -> f64 {
        self.m - self.n
    }

    pub fn check_tangent(&self, t: f64) -> Result<f64> {
        finite("t", t)?;
        if !(0.0..=self.max_tangent()).contains(&t) {
            return Err(Error::domain(format!(
                "tangent length must lie in [0, m - n = {}], got {t}",
                self.max_tangent()
            )));
        }
        Ok(t)
    }

    pub fn tangent_warnings(&self, t: f64) -> Vec<Warning> {
        if self.max_tangent() - t < TANGENT_GUARD * self.max_tangent() {
            vec![Warning::TangentNearMaximum]
        } else {
            Vec::new()
        }
    }
}

pub fn semiaxes_to_pair(a: f64, b: f64) -> Result<LandenPair> {
    LandenPair::from_semiaxes(a, b)
}

pub fn pair_to_semiaxes(pair: &LandenPair) -> (f64, f64) {
    pair.semiaxes()
}

/// Centre distance `r`, pedal distance `p` and tangent segment `t = sqrt(r² - p²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PedalPoint {
    pub r: f64,
    pub p: f64,
    pub t: f64,
}

/// The named pieces of `Hyp = t_Hyp + 2t + η₁ - 4η₂` and of the limit `L = 2S₂ - S₁`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExcessBreakdown {
    pub hyp_arc: f64,
    pub t_hyp: f64,
    pub t: f64,
    pub eta1: f64,
    pub eta2: f64,
    pub s1: f64,
    pub s2: f64,
    pub limit_l: f64,
    pub warnings: Vec<Warning>,
}
