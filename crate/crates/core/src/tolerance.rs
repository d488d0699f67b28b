use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Stopping rule for iterative kernels and the quadrature oracle.
///
/// A quantity is accepted once its error is below `max(abs_tol, rel_tol * |value|)`.
/// For iterative schemes `max_iter` counts steps; for quadrature it counts integrand
/// evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64, max_iter: usize) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v >= 0.0;
        if !ok(abs_tol) || !ok(rel_tol) {
            return Err(Error::domain("tolerances must be finite and non-negative"));
        }
        if abs_tol == 0.0 && rel_tol == 0.0 {
            return Err(Error::domain("at least one of abs_tol, rel_tol must be positive"));
        }
        if max_iter == 0 {
            return Err(Error::domain("max_iter must be at least 1"));
        }
        Ok(Tolerance { abs_tol, rel_tol, max_iter })
    }

    /// Machine-precision stopping for quadratically convergent iterations.
    pub const fn iterative() -> Self {
        Tolerance { abs_tol: 0.0, rel_tol: 4.0 * f64::EPSILON, max_iter: 64 }
    }

    /// Default oracle tolerance: abs 1e-13, rel 1e-12, 2e6 evaluations.
    pub const fn quadrature() -> Self {
        Tolerance { abs_tol: 1e-13, rel_tol: 1e-12, max_iter: 2_000_000 }
    }

    /// Tighter oracle setting used by the residual checks.
    pub const fn strict_quadrature() -> Self {
        Tolerance { abs_tol: 1e-15, rel_tol: 1e-13, max_iter: 2_000_000 }
    }

    pub fn with_abs(self, abs_tol: f64) -> Result<Self> {
        Tolerance::new(abs_tol, self.rel_tol, self.max_iter)
    }

    pub fn bound(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::quadrature()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_all_zero() {
        assert!(Tolerance::new(0.0, 0.0, 10).is_err());
        assert!(Tolerance::new(-1.0, 1e-3, 10).is_err());
        assert!(Tolerance::new(1e-3, f64::NAN, 10).is_err());
        assert!(Tolerance::new(1e-3, 0.0, 0).is_err());
        assert!(Tolerance::new(0.0, 1e-3, 10).is_ok());
    }

    #[test]
    fn bound_takes_larger_side() {
        let t = Tolerance::new(1e-10, 1e-6, 5).unwrap();
        assert_eq!(t.bound(1.0), 1e-6);
        assert_eq!(t.bound(1e-8), 1e-10);
    }
}
