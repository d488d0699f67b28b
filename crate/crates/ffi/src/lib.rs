//! C ABI over `rectify-core`.
//!
//! Every fallible function returns a [`RectifyStatus`] and writes its result
//! through an out-pointer, which is left untouched on failure. The message of
//! the most recent failure on the calling thread is available from
//! [`rectify_last_error`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rectify::agm::{agm, AgmSequence};
use rectify::cli::svg;
use rectify::conic::{self, Hyperbola, LandenPair};
use rectify::elliptic::{self, Amplitude, Modulus};
use rectify::error::Error;
use rectify::tolerance::Tolerance;
use rectify::transform::{self, ResidualReport};

/// Outcome of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RectifyStatus {
    Ok = 0,
    /// An argument violated a precondition.
    Domain = 1,
    /// An iteration or quadrature ran out of budget.
    NoConvergence = 2,
    /// An integrand produced NaN or an infinity.
    NonFinite = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// An internal panic was caught.
    Internal = 5,
}

/// Both sides of a checked identity.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RectifyResidual {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

/// Opaque AGM iterate history.
pub struct RectifyAgm {
    seq: AgmSequence,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> RectifyStatus {
    match e {
        Error::Domain(_) => RectifyStatus::Domain,
        Error::NoConvergence { .. } => RectifyStatus::NoConvergence,
        Error::NonFiniteIntegrand { .. } => RectifyStatus::NonFinite,
    }
}

/// Runs `f`, stores its value through `out` on success, and maps every failure to a status.
fn guard<T>(out: *mut T, f: impl FnOnce() -> rectify::error::Result<T>) -> RectifyStatus {
    if out.is_null() {
        set_error("output pointer is null".into());
        return RectifyStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => {
            // SAFETY: non-null and, per the contract of every caller, valid for a write of T
            unsafe { out.write(v) };
            RectifyStatus::Ok
        }
        Ok(Err(e)) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            RectifyStatus::Internal
        }
    }
}

fn residual(r: ResidualReport) -> RectifyResidual {
    RectifyResidual { lhs: r.lhs, rhs: r.rhs, residual: r.residual }
}

fn it() -> Tolerance {
    Tolerance::iterative()
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn rectify_status_message(status: RectifyStatus) -> *const c_char {
    let s: &'static CStr = match status {
        RectifyStatus::Ok => c"ok",
        RectifyStatus::Domain => c"domain error",
        RectifyStatus::NoConvergence => c"no convergence",
        RectifyStatus::NonFinite => c"non-finite integrand",
        RectifyStatus::NullPointer => c"null pointer",
        RectifyStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Message of the last failure on this thread; empty if none. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn rectify_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Complete integral of the first kind `K(k)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_ellint_k(k: f64, out: *mut f64) -> RectifyStatus {
    guard(out, || elliptic::complete_k(Modulus::new(k)?, &it()))
}

/// Complete integral of the second kind `E(k)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_ellint_e(k: f64, out: *mut f64) -> RectifyStatus {
    guard(out, || elliptic::complete_e(Modulus::new(k)?, &it()))
}

/// Incomplete integral of the first kind `F(φ, k)`, `0 <= φ <= π/2`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_ellint_f(phi: f64, k: f64, out: *mut f64) -> RectifyStatus {
    guard(out, || elliptic::incomplete_f(Amplitude::new(phi)?, Modulus::new(k)?, &it()))
}

/// Incomplete integral of the second kind `E(φ, k)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_ellint_einc(phi: f64, k: f64, out: *mut f64) -> RectifyStatus {
    guard(out, || elliptic::incomplete_e(Amplitude::new(phi)?, Modulus::new(k)?, &Tolerance::quadrature()))
}

/// Limit of the arithmetic-geometric mean.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_agm(p: f64, q: f64, out: *mut f64) -> RectifyStatus {
    guard(out, || Ok(agm(p, q, &it())?.limit))
}

/// Runs the AGM and returns a handle to its iterate history. A `tol` of zero
/// selects machine precision.
///
/// # Safety
/// `out` must be valid for writes. The handle must be released with [`rectify_agm_free`].
#[no_mangle]
pub unsafe extern "C" fn rectify_agm_new(p: f64, q: f64, tol: f64, out: *mut *mut RectifyAgm) -> RectifyStatus {
    guard(out, || {
        let t = if tol == 0.0 { it() } else { Tolerance::new(tol, 0.0, it().max_iter)? };
        let seq = agm(p, q, &t)?;
        Ok(Box::into_raw(Box::new(RectifyAgm { seq })))
    })
}

/// Number of stored pairs, the starting pair included. Zero for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rectify_agm_len(h: *const RectifyAgm) -> usize {
    h.as_ref().map_or(0, |h| h.seq.iterates.len())
}

/// The `i`-th iterate pair.
///
/// # Safety
/// `h` must be null or a live handle; `p` and `q` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_agm_iterate(
    h: *const RectifyAgm,
    i: usize,
    p: *mut f64,
    q: *mut f64,
) -> RectifyStatus {
    let Some(h) = h.as_ref() else {
        set_error("agm handle is null".into());
        return RectifyStatus::NullPointer;
    };
    if p.is_null() || q.is_null() {
        set_error("output pointer is null".into());
        return RectifyStatus::NullPointer;
    }
    let mut pair = (0.0, 0.0);
    let status = guard(&mut pair, || {
        h.seq
            .iterates
            .get(i)
            .copied()
            .ok_or_else(|| Error::Domain(format!("iterate index {i} out of range 0..{}", h.seq.iterates.len())))
    });
    if status == RectifyStatus::Ok {
        p.write(pair.0);
        q.write(pair.1);
    }
    status
}

/// Common limit; NaN for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rectify_agm_limit(h: *const RectifyAgm) -> f64 {
    h.as_ref().map_or(f64::NAN, |h| h.seq.limit)
}

/// Releases a handle from [`rectify_agm_new`]; null is ignored.
///
/// # Safety
/// `h` must be null or a live handle, and is dangling afterwards.
#[no_mangle]
pub unsafe extern "C" fn rectify_agm_free(h: *mut RectifyAgm) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Hyperbolic excess at infinity of the hyperbola with semiaxes `(a, b)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_excess_closed(a: f64, b: f64, out: *mut f64) -> RectifyStatus {
    guard(out, || conic::excess_infinity_closed(&Hyperbola::new(a, b)?))
}

/// The excess from the two quadrantal arcs of the Landen pair `(m, n)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_excess_landen(m: f64, n: f64, out: *mut f64) -> RectifyStatus {
    guard(out, || conic::excess_infinity_landen(&LandenPair::new(m, n)?))
}

/// Small-`a/b` series with `terms` terms (1 to 3).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_excess_series(a: f64, b: f64, terms: u32, out: *mut f64) -> RectifyStatus {
    guard(out, || conic::excess_infinity_series(&Hyperbola::new(a, b)?, terms as usize))
}

/// Excess at the point with pedal distance `p`, `0 < p <= a`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_excess_finite(a: f64, b: f64, p: f64, out: *mut f64) -> RectifyStatus {
    guard(out, || conic::excess_finite(&Hyperbola::new(a, b)?, p))
}

/// One-step amplitude identity for `F(φ, k)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_check_gleichung(phi: f64, k: f64, out: *mut RectifyResidual) -> RectifyStatus {
    guard(out, || Ok(residual(transform::check_gleichung(Amplitude::new(phi)?, Modulus::new(k)?)?)))
}

/// Descending-modulus identity for `E(k)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_check_borwein(k: f64, out: *mut RectifyResidual) -> RectifyStatus {
    guard(out, || Ok(residual(transform::check_borwein(Modulus::new(k)?)?)))
}

/// Invariance of the algebraic integral under one coefficient step.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_check_agm_invariance(
    x: f64,
    p: f64,
    q: f64,
    out: *mut RectifyResidual,
) -> RectifyStatus {
    guard(out, || Ok(residual(transform::check_agm_invariance(x, p, q)?)))
}

/// Hyperbola arc against tangents and ellipse arcs at tangent length `t`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_check_landen(m: f64, n: f64, t: f64, out: *mut RectifyResidual) -> RectifyStatus {
    guard(out, || Ok(residual(conic::landen_theorem_check(&LandenPair::new(m, n)?, t)?.1)))
}

/// Arc difference of the two points with tangent length `t`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_check_fagnano(m: f64, n: f64, t: f64, out: *mut RectifyResidual) -> RectifyStatus {
    guard(out, || Ok(residual(conic::fagnano_check(&LandenPair::new(m, n)?, t)?)))
}

/// SVG document of the construction, NUL-terminated. Release with [`rectify_string_free`].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rectify_construct_svg(m: f64, n: f64, t: f64, out: *mut *mut c_char) -> RectifyStatus {
    guard(out, || {
        let doc = svg::render(&svg::construct(&LandenPair::new(m, n)?, t)?);
        Ok(CString::new(doc).expect("svg text has no nul bytes").into_raw())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet released.
#[no_mangle]
pub unsafe extern "C" fn rectify_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
