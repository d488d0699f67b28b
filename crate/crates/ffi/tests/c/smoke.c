#include <math.h>
#include <stdio.h>
#include <string.h>

#include "rectify.h"

static int failures = 0;

static void expect(int ok, const char *what) {
  if (!ok) {
    fprintf(stderr, "FAILED: %s\n", what);
    failures++;
  }
}

int main(void) {
  double v = 0.0;
  expect(rectify_ellint_k(0.0, &v) == RECTIFY_STATUS_OK, "K(0) status");
  expect(fabs(v - 1.5707963267948966) < 1e-15, "K(0) value");

  expect(rectify_ellint_k(2.0, &v) == RECTIFY_STATUS_DOMAIN, "K(2) rejected");
  expect(strstr(rectify_last_error(), "modulus") != NULL, "error message");

  RectifyAgm *h = NULL;
  expect(rectify_agm_new(1.0, 0.8, 0.0, &h) == RECTIFY_STATUS_OK, "agm handle");
  size_t n = rectify_agm_len(h);
  double p = 0.0, q = 0.0;
  expect(n >= 4, "agm length");
  expect(rectify_agm_iterate(h, 3, &p, &q) == RECTIFY_STATUS_OK, "iterate 3");
  expect(fabs(p - q) < 1e-11, "third iterates agree to 11 digits");
  expect(rectify_agm_iterate(h, n, &p, &q) == RECTIFY_STATUS_DOMAIN, "index out of range");
  expect(fabs(rectify_agm_limit(h) - 0.8972114321150411) < 1e-15, "agm limit");
  rectify_agm_free(h);

  RectifyResidual r;
  expect(rectify_check_landen(2.0, 1.0, 0.5, &r) == RECTIFY_STATUS_OK, "landen status");
  expect(r.residual < 1e-9, "landen residual");

  char *svg = NULL;
  expect(rectify_construct_svg(2.0, 1.0, 0.5, &svg) == RECTIFY_STATUS_OK, "svg status");
  expect(svg != NULL && strstr(svg, "data-label=\"F\"") != NULL, "svg content");
  rectify_string_free(svg);
  expect(rectify_construct_svg(2.0, 1.0, 1.0, &svg) == RECTIFY_STATUS_DOMAIN, "svg at the maximum");

  printf("%d failures\n", failures);
  return failures == 0 ? 0 : 1;
}
