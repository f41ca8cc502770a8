#ifndef LIECOHOM_H
#define LIECOHOM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LcStatus {
  LC_STATUS_OK = 0,
  LC_STATUS_NULL_POINTER = 1,
  LC_STATUS_INVALID_UTF8 = 2,
  LC_STATUS_UNKNOWN_ENTRY = 3,
  LC_STATUS_PARSE_ERROR = 4,
  LC_STATUS_INVALID_ALGEBRA = 5,
  LC_STATUS_NOT_SIMPLE = 6,
  LC_STATUS_CARTAN_FAILURE = 7,
  LC_STATUS_COHOMOLOGY_FAILURE = 8,
  LC_STATUS_BUFFER_TOO_SMALL = 9,
  LC_STATUS_GEODESIC_FAILURE = 10,
  LC_STATUS_PANIC = 11,
} LcStatus;

/**
 * Which subalgebra to take cohomology relative to.
 */
typedef enum LcRelative {
  /**
   * Absolute cohomology.
   */
  LC_RELATIVE_NONE = 0,
  /**
   * The fixed points `k` of the catalog Cartan involution.
   */
  LC_RELATIVE_K = 1,
  /**
   * The derived algebra `[k, k]`.
   */
  LC_RELATIVE_M = 2,
} LcRelative;

/**
 * Opaque algebra handle.
 */
typedef struct LcAlgebra LcAlgebra;

typedef struct LcSimplexReport {
  size_t order;
  size_t tuples;
  double omega_scale;
  double max_defect;
  double max_invariance_residual;
  double degenerate_value;
  double max_abs_value;
  double first_value;
} LcSimplexReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *lc_status_message(enum LcStatus status);

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *lc_last_error(void);

/**
 * Builds a catalog entry such as `"su21"` or `"sl3C"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LcStatus lc_algebra_from_catalog(const char *name, size_t max_dim, struct LcAlgebra **out);

/**
 * Parses the JSON algebra format (`name`, `dim`, `labels`, `brackets`).
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LcStatus lc_algebra_from_json(const char *json, struct LcAlgebra **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `alg` must come from this library and not be used afterwards.
 */
void lc_algebra_free(struct LcAlgebra *alg);

/**
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer.
 */
enum LcStatus lc_algebra_dim(const struct LcAlgebra *alg, size_t *out);

/**
 * Serializes the algebra; free the result with [`lc_string_free`].
 *
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer.
 */
enum LcStatus lc_algebra_to_json(const struct LcAlgebra *alg, char **out);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void lc_string_free(char *s);

/**
 * Writes `(positive, negative, zero)` of the Killing form to `out[0..3]`.
 *
 * # Safety
 * `alg` must be a live handle and `out` must have room for 3 values.
 */
enum LcStatus lc_killing_signature(const struct LcAlgebra *alg, size_t *out);

/**
 * Whether a simple algebra admits a complex structure.
 *
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer.
 */
enum LcStatus lc_has_complex_structure(const struct LcAlgebra *alg, bool *out);

/**
 * Writes `dim H^k` for `k = 0..=max_degree` to `out`, which must hold
 * `max_degree + 1` values. Relative modes need a catalog handle.
 *
 * # Safety
 * `alg` must be a live handle and `out` must point to `out_len` values.
 */
enum LcStatus lc_cohomology_dims(const struct LcAlgebra *alg,
                                 enum LcRelative relative,
                                 size_t max_degree,
                                 size_t *out,
                                 size_t out_len);

/**
 * Runs the seeded geodesic simplex checks on hyperbolic 3-space.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LcStatus lc_simplex_suite(uint64_t seed,
                               size_t tuples,
                               size_t order,
                               struct LcSimplexReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIECOHOM_H */
