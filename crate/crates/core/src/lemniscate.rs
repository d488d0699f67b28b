use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::agm::agm;
use crate::elliptic::{complete_k, Modulus};
use crate::error::{finite, Error, Result};
use crate::tolerance::Tolerance;

/// Arc lengths of the lemniscate `(x²+y²)² = R²(x²-y²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Lemniscate {
    /// One loop-quarter, `(R/√2) K(1/√2)`.
    pub quarter_arc: f64,
    /// Whole curve, `2πR / M(1, √2)`.
    pub full_arc: f64,
    /// `1 / M(1, √2)`.
    pub gauss_constant: f64,
}

pub fn lemniscate(radius: f64) -> Result<Lemniscate> {
    finite("radius", radius)?;
    if radius <= 0.0 {
        return Err(Error::domain(format!("radius must be positive, got {radius}")));
    }
    let tol = Tolerance::iterative();
    let m = agm(1.0, SQRT_2, &tol)?.limit;
    let k = complete_k(Modulus::new(FRAC_1_SQRT_2)?, &tol)?;
    Ok(Lemniscate { quarter_arc: radius * FRAC_1_SQRT_2 * k, full_arc: 2.0 * PI * radius / m, gauss_constant: 1.0 / m })
}
