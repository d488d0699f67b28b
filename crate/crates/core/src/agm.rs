//! Arithmetic-geometric mean with the full iterate history retained.

use serde::{Deserialize, Serialize};

use crate::error::{finite, Error, Result};
use crate::tolerance::Tolerance;

/// Iterates `p_{n+1} = (p_n + q_n)/2`, `q_{n+1} = sqrt(p_n q_n)` and their common limit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AgmSequence {
    /// Starting pair after ordering, `p0 >= q0`.
    pub p0: f64,
    pub q0: f64,
    /// `iterates[0] == (p0, q0)`; one entry per step after that.
    pub iterates: Vec<(f64, f64)>,
    pub limit: f64,
    pub iterations: usize,
    /// Set when the caller passed `p < q` and the pair was reordered.
    pub swapped: bool,
}

impl AgmSequence {
    /// `|p_n - q_n|` for every recorded step.
    pub fn gaps(&self) -> impl Iterator<Item = f64> + '_ {
        self.iterates.iter().map(|(p, q)| p - q)
    }
}

pub fn agm(p: f64, q: f64, tol: &Tolerance) -> Result<AgmSequence> {
    finite("p", p)?;
    finite("q", q)?;
    if p <= 0.0 || q <= 0.0 {
        return Err(Error::domain(format!("agm needs positive arguments, got ({p}, {q})")));
    }
    let swapped = p < q;
    let (p0, q0) = if swapped { (q, p) } else { (p, q) };

    let mut iterates = vec![(p0, q0)];
    let (mut a, mut g) = (p0, q0);
    while a - g > tol.bound(a) {
        if iterates.len() > tol.max_iter {
            return Err(Error::NoConvergence {
                what: "arithmetic-geometric mean",
                iterations: iterates.len() - 1,
                estimate: a - g,
            });
        }
        let next = (0.5 * (a + g), (a * g).sqrt());
        // rounding can stall one ulp apart; that is the limit
        if next == (a, g) {
            break;
        }
        (a, g) = next;
        // keep the ordering exact under rounding
        if g > a {
            g = a;
        }
        iterates.push((a, g));
    }
    Ok(AgmSequence { p0, q0, limit: 0.5 * (a + g), iterations: iterates.len() - 1, iterates, swapped })
}
