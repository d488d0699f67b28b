#ifndef RECTIFY_H
#define RECTIFY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a call.
 */
typedef enum RectifyStatus {
  RECTIFY_STATUS_OK = 0,
  /**
   * An argument violated a precondition.
   */
  RECTIFY_STATUS_DOMAIN = 1,
  /**
   * An iteration or quadrature ran out of budget.
   */
  RECTIFY_STATUS_NO_CONVERGENCE = 2,
  /**
   * An integrand produced NaN or an infinity.
   */
  RECTIFY_STATUS_NON_FINITE = 3,
  /**
   * A required pointer argument was null.
   */
  RECTIFY_STATUS_NULL_POINTER = 4,
  /**
   * An internal panic was caught.
   */
  RECTIFY_STATUS_INTERNAL = 5,
} RectifyStatus;

/**
 * Opaque AGM iterate history.
 */
typedef struct RectifyAgm RectifyAgm;

/**
 * Both sides of a checked identity.
 */
typedef struct RectifyResidual {
  double lhs;
  double rhs;
  double residual;
} RectifyResidual;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *rectify_status_message(enum RectifyStatus status);

/**
 * Message of the last failure on this thread; empty if none. Valid until the next
 * failing call on the same thread.
 */
const char *rectify_last_error(void);

/**
 * Complete integral of the first kind `K(k)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_ellint_k(double k, double *out);

/**
 * Complete integral of the second kind `E(k)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_ellint_e(double k, double *out);

/**
 * Incomplete integral of the first kind `F(φ, k)`, `0 <= φ <= π/2`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_ellint_f(double phi, double k, double *out);

/**
 * Incomplete integral of the second kind `E(φ, k)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_ellint_einc(double phi, double k, double *out);

/**
 * Limit of the arithmetic-geometric mean.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_agm(double p, double q, double *out);

/**
 * Runs the AGM and returns a handle to its iterate history. A `tol` of zero
 * selects machine precision.
 *
 * # Safety
 * `out` must be valid for writes. The handle must be released with [`rectify_agm_free`].
 */
enum RectifyStatus rectify_agm_new(double p, double q, double tol, struct RectifyAgm **out);

/**
 * Number of stored pairs, the starting pair included. Zero for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t rectify_agm_len(const struct RectifyAgm *h);

/**
 * The `i`-th iterate pair.
 *
 * # Safety
 * `h` must be null or a live handle; `p` and `q` must be valid for writes.
 */
enum RectifyStatus rectify_agm_iterate(const struct RectifyAgm *h, size_t i, double *p, double *q);

/**
 * Common limit; NaN for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
double rectify_agm_limit(const struct RectifyAgm *h);

/**
 * Releases a handle from [`rectify_agm_new`]; null is ignored.
 *
 * # Safety
 * `h` must be null or a live handle, and is dangling afterwards.
 */
void rectify_agm_free(struct RectifyAgm *h);

/**
 * Hyperbolic excess at infinity of the hyperbola with semiaxes `(a, b)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_excess_closed(double a, double b, double *out);

/**
 * The excess from the two quadrantal arcs of the Landen pair `(m, n)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_excess_landen(double m, double n, double *out);

/**
 * Small-`a/b` series with `terms` terms (1 to 3).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_excess_series(double a, double b, uint32_t terms, double *out);

/**
 * Excess at the point with pedal distance `p`, `0 < p <= a`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_excess_finite(double a, double b, double p, double *out);

/**
 * One-step amplitude identity for `F(φ, k)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_check_gleichung(double phi, double k, struct RectifyResidual *out);

/**
 * Descending-modulus identity for `E(k)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_check_borwein(double k, struct RectifyResidual *out);

/**
 * Invariance of the algebraic integral under one coefficient step.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_check_agm_invariance(double x,
                                                double p,
                                                double q,
                                                struct RectifyResidual *out);

/**
 * Hyperbola arc against tangents and ellipse arcs at tangent length `t`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_check_landen(double m, double n, double t, struct RectifyResidual *out);

/**
 * Arc difference of the two points with tangent length `t`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_check_fagnano(double m, double n, double t, struct RectifyResidual *out);

/**
 * SVG document of the construction, NUL-terminated. Release with [`rectify_string_free`].
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RectifyStatus rectify_construct_svg(double m, double n, double t, char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet released.
 */
void rectify_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RECTIFY_H */
