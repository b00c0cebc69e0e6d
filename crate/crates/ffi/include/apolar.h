#ifndef APOLAR_H
#define APOLAR_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes.
 */
typedef enum ApolarStatus {
  APOLAR_STATUS_OK = 0,
  APOLAR_STATUS_NULL_POINTER = 1,
  APOLAR_STATUS_INVALID_UTF8 = 2,
  APOLAR_STATUS_PARSE_ERROR = 3,
  APOLAR_STATUS_INVALID_FIELD = 4,
  APOLAR_STATUS_NOT_HOMOGENEOUS = 5,
  APOLAR_STATUS_NOT_BINOMIAL = 6,
  APOLAR_STATUS_NOT_ARTINIAN = 7,
  APOLAR_STATUS_INVALID_ARGUMENT = 8,
  APOLAR_STATUS_INTERNAL = 9,
} ApolarStatus;

/**
 * Which Lefschetz property to test.
 */
typedef enum ApolarMode {
  APOLAR_MODE_WEAK = 0,
  APOLAR_MODE_STRONG = 1,
} ApolarMode;

/**
 * A parsed homogeneous polynomial together with its variable names.
 */
typedef struct ApolarPolynomial ApolarPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `src` over the field of the given characteristic (0 or a prime).
 *
 * `vars_csv` may be null; otherwise it is a comma-separated list of
 * variable names fixing their order. On success `*out` receives a new
 * handle.
 *
 * # Safety
 * `src` and a non-null `vars_csv` must be NUL-terminated strings; `out` must
 * be a valid pointer.
 */
enum ApolarStatus apolar_polynomial_parse(const char *src,
                                          const char *vars_csv,
                                          uint64_t characteristic,
                                          struct ApolarPolynomial **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must come from [`apolar_polynomial_parse`] and not be freed twice.
 */
void apolar_polynomial_free(struct ApolarPolynomial *p);

/**
 * Number of variables, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t apolar_polynomial_nvars(const struct ApolarPolynomial *p);

/**
 * Degree of the form.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum ApolarStatus apolar_polynomial_degree(const struct ApolarPolynomial *p, uint32_t *out);

/**
 * Classification report of a binomial as JSON. With `verify`, the report
 * also carries the comparison with the direct computation of `Ann(F)`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum ApolarStatus apolar_classify_json(const struct ApolarPolynomial *p, bool verify, char **out);

/**
 * Hilbert function of `R/Ann(F)` as JSON.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum ApolarStatus apolar_hilbert_json(const struct ApolarPolynomial *p, char **out);

/**
 * Searches for a weak or strong Lefschetz element of `R/Ann(F)` and returns
 * the rank table as JSON. `trials = 0` selects the default budget.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum ApolarStatus apolar_lefschetz_json(const struct ApolarPolynomial *p,
                                        enum ApolarMode mode,
                                        uint32_t trials,
                                        uint64_t seed,
                                        char **out);

/**
 * Whether `R/Ann(F)` is a complete intersection, decided by computing the
 * minimal generators of `Ann(F)`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum ApolarStatus apolar_is_complete_intersection(const struct ApolarPolynomial *p, bool *out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void apolar_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *apolar_last_error(void);

/**
 * Library version as a static string.
 */
const char *apolar_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* APOLAR_H */
