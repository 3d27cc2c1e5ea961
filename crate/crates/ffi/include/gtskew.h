#ifndef GTSKEW_H
#define GTSKEW_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum GtskewStatus {
  GTSKEW_STATUS_OK = 0,
  GTSKEW_STATUS_NULL_POINTER = 1,
  GTSKEW_STATUS_INVALID_ARGUMENT = 2,
  GTSKEW_STATUS_INVALID_SHAPE = 3,
  GTSKEW_STATUS_COMPUTATION_ERROR = 4,
  GTSKEW_STATUS_PANIC = 5,
} GtskewStatus;

// Drinfeld currents of the Yangian on the GT basis of a skew shape.
typedef struct GtskewCurrents GtskewCurrents;

// Currents of the quantum affine superalgebra on the GT basis.
typedef struct GtskewQCurrents GtskewQCurrents;

// A validated skew shape `(m, n, r, λ, μ)`.
typedef struct GtskewShape GtskewShape;

// Thin/tame verdict for a gl(1|1) tensor product.
typedef struct GtskewGl11Verdict {
  size_t dim;
  bool thin;
  bool tame;
  bool flipped_tame;
} GtskewGl11Verdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the
// next gtskew call on the same thread; do not free.
const char *gtskew_last_error(void);

// Library version, a static string.
const char *gtskew_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void gtskew_string_free(char *s);

// Validates and creates a skew shape; `lambda` has `m + n + r` entries and
// `mu` has `r` entries (may be null when `r = 0`).
//
// # Safety
// `lambda` and `mu` must point to `lambda_len` and `mu_len` readable values;
// `out` must be writable.
enum GtskewStatus gtskew_shape_new(size_t m,
                                   size_t n,
                                   size_t r,
                                   const int64_t *lambda,
                                   size_t lambda_len,
                                   const int64_t *mu,
                                   size_t mu_len,
                                   struct GtskewShape **out);

// # Safety
// `shape` must be null or a live handle from [`gtskew_shape_new`].
void gtskew_shape_free(struct GtskewShape *shape);

// Number of admissible GT tableaux, i.e. the dimension of the module.
//
// # Safety
// `shape` must be a live handle; `out` writable.
enum GtskewStatus gtskew_shape_dimension(const struct GtskewShape *shape, size_t *out);

// The shape and its GT basis as JSON `{"shape": …, "tableaux": […]}`.
//
// # Safety
// `shape` must be a live handle; `out` writable. Free the result with
// [`gtskew_string_free`].
enum GtskewStatus gtskew_shape_tableaux_json(const struct GtskewShape *shape, char **out);

// # Safety
// `shape` must be a live handle; `out` writable.
enum GtskewStatus gtskew_currents_new(const struct GtskewShape *shape, struct GtskewCurrents **out);

// # Safety
// `c` must be null or a live handle from [`gtskew_currents_new`].
void gtskew_currents_free(struct GtskewCurrents *c);

// # Safety
// `c` must be a live handle; `out` writable.
enum GtskewStatus gtskew_currents_dimension(const struct GtskewCurrents *c, size_t *out);

// ℓ-weights pairwise distinct.
//
// # Safety
// `c` must be a live handle; `out` writable.
enum GtskewStatus gtskew_currents_is_thin(const struct GtskewCurrents *c, bool *out);

// Thin and strongly connected along nonzero transformations.
//
// # Safety
// `c` must be a live handle; `out` writable.
enum GtskewStatus gtskew_currents_is_irreducible(const struct GtskewCurrents *c, bool *out);

// The currents as JSON (rational functions as `{"num": […], "den": […]}`).
//
// # Safety
// `c` must be a live handle; `out` writable. Free with [`gtskew_string_free`].
enum GtskewStatus gtskew_currents_json(const struct GtskewCurrents *c, char **out);

// q-character as JSON: a list of `[ℓ-weight, multiplicity]`.
//
// # Safety
// `c` must be a live handle; `out` writable. Free with [`gtskew_string_free`].
enum GtskewStatus gtskew_currents_qchar_json(const struct GtskewCurrents *c, char **out);

// Drinfeld relations, central series, thinness, irreducibility and
// nonvanishing. `report_json` may be null; otherwise it receives the check
// list (free with [`gtskew_string_free`]).
//
// # Safety
// `c` must be a live handle; `passed` writable; `report_json` null or writable.
enum GtskewStatus gtskew_currents_verify(const struct GtskewCurrents *c,
                                         size_t samples,
                                         size_t order,
                                         uint64_t seed,
                                         bool *passed,
                                         char **report_json);

// # Safety
// `shape` must be a live handle; `out` writable.
enum GtskewStatus gtskew_qcurrents_new(const struct GtskewShape *shape,
                                       struct GtskewQCurrents **out);

// # Safety
// `c` must be null or a live handle from [`gtskew_qcurrents_new`].
void gtskew_qcurrents_free(struct GtskewQCurrents *c);

// Modes `x_{k,a}^±` for `|a| ≤ window` as JSON, `ℚ(q)` entries as
// `{"num": […], "den": […], "qshift": e}`.
//
// # Safety
// `c` must be a live handle; `out` writable. Free with [`gtskew_string_free`].
enum GtskewStatus gtskew_qcurrents_modes_json(const struct GtskewQCurrents *c,
                                              int64_t window,
                                              char **out);

// Quantum relation suite on modes `|a| ≤ window` plus thinness,
// irreducibility and central series.
//
// # Safety
// `c` must be a live handle; `passed` writable; `report_json` null or writable.
enum GtskewStatus gtskew_qcurrents_verify(const struct GtskewQCurrents *c,
                                          int64_t window,
                                          size_t samples,
                                          uint64_t seed,
                                          bool *passed,
                                          char **report_json);

// Verdict for `⊗ L(a_i, b_i)` given as a JSON list of `[a, b]` rational
// strings, e.g. `[["3","0"],["-1","0"]]`.
//
// # Safety
// `spec_json` must be a nul-terminated string; `out` writable.
enum GtskewStatus gtskew_gl11_analyze(const char *spec_json, struct GtskewGl11Verdict *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GTSKEW_H */
