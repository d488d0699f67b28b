//! Complete and incomplete elliptic integrals of the first and second kind.
//!
//! All routines use the modulus convention: `K(k) = ∫₀^{π/2} dθ / sqrt(1 - k² sin²θ)`.
//!
//! * `K(k)` comes from one AGM run, `K = π / (2 M(1, k'))`.
//! * `E(k)` descends the modulus with `k ↦ (1-k')/(1+k')` until it is tiny, seeds
//!   with the hypergeometric series and climbs back with
//!   `E(k) = (1+k)/2 E(2√k/(1+k)) + (1-k²)/2 K(k)`.
//! * `F(φ, k)` applies the same descent to the amplitude as well, down to a modulus
//!   below `1e-10` where `F(φ, k) ≈ φ`.
//! * `E(φ, k)` is integrated directly by the quadrature oracle.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::agm::agm;
use crate::error::{finite, Error, Result};
use crate::quad::{integrate, Singularity};
use crate::tolerance::Tolerance;

/// Elliptic modulus `k`, `0 <= k <= 1`, carried together with its complement
/// `k' = sqrt(1 - k²)` so that moduli close to 1 keep their precision through
/// repeated Landen steps.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Modulus {
    k: f64,
    complement: f64,
}

impl Modulus {
    pub fn new(k: f64) -> Result<Self> {
        finite("modulus", k)?;
        if !(0.0..=1.0).contains(&k) {
            return Err(Error::domain(format!("modulus must lie in [0, 1], got {k}")));
        }
        Ok(Modulus { k, complement: complement(k) })
    }

    /// Builds the modulus from its complement, exact on the complement side.
    pub fn from_complement(kp: f64) -> Result<Self> {
        finite("complementary modulus", kp)?;
        if !(0.0..=1.0).contains(&kp) {
            return Err(Error::domain(format!("complementary modulus must lie in [0, 1], got {kp}")));
        }
        Ok(Modulus { k: complement(kp), complement: kp })
    }

    pub fn value(self) -> f64 {
        self.k
    }

    /// `k' = sqrt(1 - k²)`.
    pub fn complement(self) -> f64 {
        self.complement
    }

    /// `k̂ = 2√k/(1+k)`, with `k̂' = k'²/(1+k)²`.
    pub fn ascend(self) -> Modulus {
        let (k, complement) = ascend_pair(self.k, self.complement);
        Modulus { k, complement }
    }

    /// `(1-k')/(1+k')`, the inverse of [`Modulus::ascend`].
    pub fn descend(self) -> Modulus {
        let (k, complement) = descend_pair(self.k, self.complement);
        Modulus { k, complement }
    }

    fn below_one(self, what: &str) -> Result<f64> {
        if self.k >= 1.0 {
            Err(Error::domain(format!("{what} diverges at modulus 1")))
        } else {
            Ok(self.k)
        }
    }
}

/// Amplitude `φ` in radians, `0 <= φ <= π/2`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Amplitude(f64);

impl Amplitude {
    pub fn new(phi: f64) -> Result<Self> {
        finite("amplitude", phi)?;
        if !(0.0..=FRAC_PI_2).contains(&phi) {
            return Err(Error::domain(format!("amplitude must lie in [0, pi/2], got {phi}")));
        }
        Ok(Amplitude(phi))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub const fn quarter_turn() -> Self {
        Amplitude(FRAC_PI_2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeriesKind {
    K,
    E,
}

pub(crate) fn complement(k: f64) -> f64 {
    ((1.0 - k) * (1.0 + k)).max(0.0).sqrt()
}

fn ascend_pair(k: f64, kp: f64) -> (f64, f64) {
    let d = 1.0 + k;
    ((2.0 * k.sqrt() / d).min(1.0), kp * kp / (d * d))
}

/// `k²/(1+k')²` is `(1-k')/(1+k')` without the cancellation for small `k`.
fn descend_pair(k: f64, kp: f64) -> (f64, f64) {
    let (kp_lower, k_lower) = ascend_pair(kp, k);
    (k_lower, kp_lower)
}

/// Continuous amplitude for one descent step: given `φ̂` at modulus `k̂` (with
/// complement `k̂'`), returns `φ` at the lower modulus with `sin(2φ̂ - φ) = k sin φ`.
/// Unlike the principal-branch map this keeps growing past `π/2`.
pub(crate) fn amplitude_continued(phi_hat: f64, comp_hat: f64) -> f64 {
    let (s, c) = phi_hat.sin_cos();
    2.0 * phi_hat - ((1.0 - comp_hat) * s * c / (c * c + comp_hat * s * s)).atan()
}

const DESCENT_FLOOR: f64 = 1e-10;
const SERIES_SEED_MODULUS: f64 = 1e-3;
const SERIES_SEED_TERMS: usize = 10;
/// Largest partial sum [`series_ke`] will form.
pub const SERIES_MAX_TERMS: usize = 200;

/// `K(k)` through `π / (2 M(1, k'))`.
pub fn complete_k(k: Modulus, tol: &Tolerance) -> Result<f64> {
    k.below_one("complete integral K")?;
    let m = agm(1.0, k.complement(), tol)?;
    Ok(PI / (2.0 * m.limit))
}

/// `E(k)` by modulus descent, series seed and the ascending identity.
pub fn complete_e(k: Modulus, tol: &Tolerance) -> Result<f64> {
    if k.value() == 1.0 {
        return Ok(1.0);
    }
    let mut chain = vec![k];
    let mut cur = k;
    while cur.value() >= SERIES_SEED_MODULUS {
        if chain.len() > tol.max_iter {
            return Err(Error::NoConvergence {
                what: "modulus descent for E",
                iterations: chain.len(),
                estimate: cur.value(),
            });
        }
        cur = cur.descend();
        chain.push(cur);
    }
    let mut e = partial_sum(SeriesKind::E, cur.value(), SERIES_SEED_TERMS);
    let mut kk = partial_sum(SeriesKind::K, cur.value(), SERIES_SEED_TERMS);
    for lower in chain[1..].iter().rev() {
        let (l, lp) = (lower.value(), lower.complement());
        e = (2.0 * e - lp * lp * kk) / (1.0 + l);
        kk *= 1.0 + l;
    }
    Ok(e)
}

/// `B(k) = ∫₀^{π/2} cos²θ / sqrt(1 - k² sin²θ) dθ = (E - k'²K) / k²`.
///
/// Uses `E - k'²K = K (k²/2 - Σ_{n>=1} 2^{n-1} c_n²)` with the AGM gaps
/// `c_{n+1} = c_n² / (4 a_{n+1})`, which has no cancellation as `k → 0`.
pub fn complete_b(k: Modulus, tol: &Tolerance) -> Result<f64> {
    let kv = k.below_one("complete integral B")?;
    if kv == 0.0 {
        return Ok(0.5 * FRAC_PI_2);
    }
    let (mut a, mut g) = (1.0, k.complement());
    // r = c_n / k
    let (mut c, mut r) = (kv, 1.0);
    let mut weight = 1.0;
    let mut sum = 0.0;
    let mut steps = 0;
    loop {
        steps += 1;
        if steps > tol.max_iter {
            return Err(Error::NoConvergence { what: "AGM gap series for B", iterations: steps, estimate: c });
        }
        let a_next = 0.5 * (a + g);
        g = (a * g).sqrt();
        a = a_next;
        r *= c / (4.0 * a);
        c = c * c / (4.0 * a);
        let term = weight * r * r;
        sum += term;
        weight *= 2.0;
        if term <= f64::EPSILON * 1e-3 * sum || c == 0.0 {
            break;
        }
    }
    while a - g > tol.bound(a) {
        let a_next = 0.5 * (a + g);
        g = (a * g).sqrt();
        a = a_next;
    }
    Ok(PI / (a + g) * (0.5 - sum))
}

/// `F(φ, k)` by the descending modulus/amplitude recursion.
pub fn incomplete_f(phi: Amplitude, k: Modulus, tol: &Tolerance) -> Result<f64> {
    k.below_one("incomplete integral F")?;
    let phi = phi.value();
    if phi == 0.0 {
        return Ok(0.0);
    }
    let mut amp = phi;
    let mut modulus = k;
    let mut scale = 1.0;
    let mut steps = 0;
    while modulus.value() >= DESCENT_FLOOR {
        steps += 1;
        if steps > tol.max_iter {
            return Err(Error::NoConvergence {
                what: "descending recursion for F",
                iterations: steps,
                estimate: modulus.value(),
            });
        }
        amp = amplitude_continued(amp, modulus.complement());
        modulus = modulus.descend();
        scale *= 0.5 * (1.0 + modulus.value());
    }
    let k = modulus.value();
    let (s, c) = amp.sin_cos();
    Ok(scale * (amp + 0.25 * k * k * (amp - s * c)))
}

/// `E(φ, k)` by direct quadrature of `sqrt(1 - k² sin²θ)`.
pub fn incomplete_e(phi: Amplitude, k: Modulus, tol: &Tolerance) -> Result<f64> {
    let k = k.value();
    let phi = phi.value();
    if k == 0.0 {
        return Ok(phi);
    }
    integrate(
        |t| {
            let ks = k * t.sin();
            ((1.0 - ks) * (1.0 + ks)).max(0.0).sqrt()
        },
        0.0,
        phi,
        tol,
        Singularity::None,
    )?
    .converged_value()
}

/// Truncated hypergeometric series for `K` or `E` with `terms` terms (`n = 0..terms`).
pub fn series_ke(kind: SeriesKind, k: Modulus, terms: usize) -> Result<f64> {
    let k = k.below_one("hypergeometric series")?;
    if terms == 0 || terms > SERIES_MAX_TERMS {
        return Err(Error::domain(format!("series terms must be in 1..={SERIES_MAX_TERMS}, got {terms}")));
    }
    Ok(partial_sum(kind, k, terms))
}

/// Bound on `|series_ke(kind, k, terms) - exact|`: the first omitted term over `1 - k²`.
pub fn series_truncation_bound(kind: SeriesKind, k: Modulus, terms: usize) -> Result<f64> {
    let k = k.below_one("hypergeometric series")?;
    let x = k * k;
    let c = central_ratio(terms);
    let mut omitted = FRAC_PI_2 * c * c * x.powi(terms as i32);
    if kind == SeriesKind::E {
        omitted /= (2 * terms) as f64 - 1.0;
    }
    Ok(omitted / ((1.0 - k) * (1.0 + k)))
}

/// `(2n)! / (4^n (n!)^2)`.
fn central_ratio(n: usize) -> f64 {
    (0..n).fold(1.0, |c, i| c * (2 * i + 1) as f64 / (2 * i + 2) as f64)
}

fn partial_sum(kind: SeriesKind, k: f64, terms: usize) -> f64 {
    let x = k * k;
    let mut c = 1.0;
    let mut pow = 1.0;
    let mut sum = 0.0;
    for n in 0..terms {
        let mut term = c * c * pow;
        if kind == SeriesKind::E {
            term /= 1.0 - 2.0 * n as f64;
        }
        sum += term;
        c *= (2 * n + 1) as f64 / (2 * n + 2) as f64;
        pow *= x;
    }
    FRAC_PI_2 * sum
}
