//! Adaptive quadrature used as the independent oracle for every closed form
//! in the crate.
//!
//! Smooth panels use the 21-point Gauss-Kronrod pair with QUADPACK error
//! scaling. Panels that touch an endpoint declared singular are evaluated with
//! the tanh-sinh (double exponential) rule instead, which tolerates integrable
//! power singularities. The worst panel is bisected until the summed error
//! estimate meets the tolerance or the evaluation budget runs out.
//!
//! Integrands that blow up at an endpoint lose accuracy if they recompute the
//! distance to that endpoint as `hi - x` in floating point. [`integrate_nodes`]
//! hands the integrand a [`Node`] carrying both distances, computed directly
//! from the rule, so callers can write e.g. `1 - t` as `node.to_hi`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{finite, Error, Result};
use crate::tolerance::Tolerance;

/// Which endpoints carry an integrable singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Singularity {
    None,
    Lo,
    Hi,
    Both,
}

impl Singularity {
    fn at_lo(self) -> bool {
        matches!(self, Singularity::Lo | Singularity::Both)
    }

    fn at_hi(self) -> bool {
        matches!(self, Singularity::Hi | Singularity::Both)
    }

    fn swapped(self) -> Self {
        match self {
            Singularity::Lo => Singularity::Hi,
            Singularity::Hi => Singularity::Lo,
            s => s,
        }
    }
}

/// An abscissa together with its distances to both integration limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub x: f64,
    /// Distance from the `lo` argument, `>= 0`.
    pub to_lo: f64,
    /// Distance to the `hi` argument, `>= 0`.
    pub to_hi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadratureResult {
    /// The value, or [`Error::NoConvergence`] if the budget ran out first.
    pub fn converged_value(self) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::NoConvergence {
                what: "adaptive quadrature",
                iterations: self.evaluations,
                estimate: self.error_estimate,
            })
        }
    }
}

/// Integrates `f` over `[lo, hi]`; `hi < lo` integrates with reversed sign.
pub fn integrate<F>(f: F, lo: f64, hi: f64, tol: &Tolerance, sing: Singularity) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    integrate_nodes(|n: Node| f(n.x), lo, hi, tol, sing)
}

/// Like [`integrate`], but the integrand sees endpoint distances as well.
pub fn integrate_nodes<F>(f: F, lo: f64, hi: f64, tol: &Tolerance, sing: Singularity) -> Result<QuadratureResult>
where
    F: Fn(Node) -> f64,
{
    finite("lo", lo)?;
    finite("hi", hi)?;
    if lo == hi {
        return Ok(QuadratureResult { value: 0.0, error_estimate: 0.0, evaluations: 0, converged: true });
    }
    if hi < lo {
        let flipped = |n: Node| f(Node { x: n.x, to_lo: n.to_hi, to_hi: n.to_lo });
        let mut r = Adaptive::new(&flipped, hi, lo, tol, sing.swapped()).run()?;
        r.value = -r.value;
        return Ok(r);
    }
    Adaptive::new(&f, lo, hi, tol, sing).run()
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then_with(|| other.a.total_cmp(&self.a))
    }
}

struct Adaptive<'f, F> {
    f: &'f F,
    lo: f64,
    hi: f64,
    tol: Tolerance,
    sing: Singularity,
    evaluations: usize,
}

impl<'f, F: Fn(Node) -> f64> Adaptive<'f, F> {
    fn new(f: &'f F, lo: f64, hi: f64, tol: &Tolerance, sing: Singularity) -> Self {
        Adaptive { f, lo, hi, tol: *tol, sing, evaluations: 0 }
    }

    fn run(mut self) -> Result<QuadratureResult> {
        let mut heap = BinaryHeap::new();
        heap.push(self.panel(self.lo, self.hi)?);
        loop {
            let (value, error) = heap.iter().fold((0.0, 0.0), |(v, e), p: &Panel| (v + p.value, e + p.error));
            let target = self.tol.bound(value);
            let done = error <= target;
            if done || self.evaluations >= self.tol.max_iter {
                return Ok(QuadratureResult {
                    value,
                    error_estimate: error,
                    evaluations: self.evaluations,
                    converged: done,
                });
            }
            let worst = heap.pop().expect("heap never empties");
            let mid = worst.a + 0.5 * (worst.b - worst.a);
            if mid <= worst.a || mid >= worst.b {
                heap.push(worst);
                let (value, error) = heap.iter().fold((0.0, 0.0), |(v, e), p: &Panel| (v + p.value, e + p.error));
                return Ok(QuadratureResult {
                    value,
                    error_estimate: error,
                    evaluations: self.evaluations,
                    converged: false,
                });
            }
            heap.push(self.panel(worst.a, mid)?);
            heap.push(self.panel(mid, worst.b)?);
        }
    }

    fn panel(&mut self, a: f64, b: f64) -> Result<Panel> {
        let singular = (a == self.lo && self.sing.at_lo()) || (b == self.hi && self.sing.at_hi());
        let (value, error) = if singular { self.tanh_sinh(a, b)? } else { self.kronrod(a, b)? };
        Ok(Panel { a, b, value, error })
    }

    fn eval(&mut self, node: Node) -> Result<f64> {
        self.evaluations += 1;
        let v = (self.f)(node);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteIntegrand { x: node.x })
        }
    }

    fn interior(&self, x: f64) -> Node {
        Node { x, to_lo: x - self.lo, to_hi: self.hi - x }
    }

    fn kronrod(&mut self, a: f64, b: f64) -> Result<(f64, f64)> {
        let center = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let fc = self.eval(self.interior(center))?;
        let mut res_k = fc * WGK21[10];
        let mut res_g = 0.0;
        let mut res_abs = res_k.abs();
        let mut fv1 = [0.0; 10];
        let mut fv2 = [0.0; 10];
        for j in 0..10 {
            let dx = half * XGK21[j];
            let f1 = self.eval(self.interior(center - dx))?;
            let f2 = self.eval(self.interior(center + dx))?;
            fv1[j] = f1;
            fv2[j] = f2;
            res_k += WGK21[j] * (f1 + f2);
            res_abs += WGK21[j] * (f1.abs() + f2.abs());
            if j % 2 == 1 {
                res_g += WG10[j / 2] * (f1 + f2);
            }
        }
        let mean = 0.5 * res_k;
        let mut res_asc = WGK21[10] * (fc - mean).abs();
        for j in 0..10 {
            res_asc += WGK21[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
        }
        let value = res_k * half;
        res_abs *= half;
        res_asc *= half;
        let mut err = ((res_k - res_g) * half).abs();
        if res_asc != 0.0 && err != 0.0 {
            err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
        }
        if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
            err = err.max(50.0 * f64::EPSILON * res_abs);
        }
        Ok((value, err))
    }

    /// Tanh-sinh on `[a, b]` with step halving; the error is the change
    /// between the last two levels.
    fn tanh_sinh(&mut self, a: f64, b: f64) -> Result<(f64, f64)> {
        let half = 0.5 * (b - a);
        let width = self.hi - self.lo;
        let share = (b - a) / width;
        let left_gap = a - self.lo;
        let right_gap = self.hi - b;

        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        let mid = a + half;
        let w0 = half * FRAC_PI_2;
        let f0 = self.eval(self.interior(mid))?;
        sum += w0 * f0;
        abs_sum += (w0 * f0).abs();

        let mut step = 1.0;
        let mut prev = f64::NAN;
        let mut result = (0.0, f64::INFINITY);
        for level in 0..=DE_MAX_LEVEL {
            let stride = if level == 0 { 1 } else { 2 };
            let mut k = 1usize;
            loop {
                let u = k as f64 * step;
                if u > DE_U_MAX {
                    break;
                }
                k += stride;
                let s = FRAC_PI_2 * u.sinh();
                let e = (-2.0 * s).exp();
                let d = 2.0 * half * e / (1.0 + e);
                if d < DE_TINY {
                    break;
                }
                let w = half * FRAC_PI_2 * u.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
                let left = Node { x: a + d, to_lo: left_gap + d, to_hi: right_gap + (b - a) - d };
                let right = Node { x: b - d, to_lo: left_gap + (b - a) - d, to_hi: right_gap + d };
                let fl = self.eval(left)?;
                let fr = self.eval(right)?;
                sum += w * (fl + fr);
                abs_sum += w * (fl.abs() + fr.abs());
            }
            let estimate = sum * step;
            let floor = 10.0 * f64::EPSILON * abs_sum * step;
            if level > 0 {
                let err = (estimate - prev).abs().max(floor);
                result = (estimate, err);
                let target = 0.5 * (self.tol.abs_tol * share).max(self.tol.rel_tol * estimate.abs());
                if level >= DE_MIN_LEVEL && (err <= target || err <= floor) {
                    break;
                }
            }
            prev = estimate;
            step *= 0.5;
        }
        Ok(result)
    }
}

const DE_MIN_LEVEL: usize = 3;
const DE_MAX_LEVEL: usize = 8;
const DE_U_MAX: f64 = 6.5;
const DE_TINY: f64 = 1e-300;

#[allow(clippy::excessive_precision)]
const XGK21: [f64; 10] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
];

#[allow(clippy::excessive_precision)]
const WG10: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK21: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
