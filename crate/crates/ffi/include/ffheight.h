#ifndef FFHEIGHT_H
#define FFHEIGHT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FfhStatus {
  FFH_STATUS_OK = 0,
  FFH_STATUS_NULL_ARGUMENT = 1,
  FFH_STATUS_INVALID_UTF8 = 2,
  FFH_STATUS_PARSE = 3,
  FFH_STATUS_INVALID = 4,
  FFH_STATUS_MATH = 5,
  FFH_STATUS_BUDGET = 6,
  FFH_STATUS_OVERFLOW = 7,
  FFH_STATUS_PANIC = 8,
} FfhStatus;

/**
 * A variety with optional default primes.
 */
typedef struct FfhInstance FfhInstance;

/**
 * A polynomial over F_p[t].
 */
typedef struct FfhPoly FfhPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *ffh_version(void);

/**
 * Message of the last failed call on this thread (empty after success).
 * Valid until the next call on the same thread.
 */
const char *ffh_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library, freed once.
 */
void ffh_string_free(char *s);

/**
 * Loads an instance from the JSON instance-file format.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FfhStatus ffh_instance_from_json(const char *json, struct FfhInstance **out);

/**
 * # Safety
 * `inst` must be null or a handle from [`ffh_instance_from_json`], freed once.
 */
void ffh_instance_free(struct FfhInstance *inst);

/**
 * Number of default primes stored in the instance file.
 *
 * # Safety
 * `inst` must be a live handle and `out` a valid pointer.
 */
enum FfhStatus ffh_instance_num_primes(const struct FfhInstance *inst, size_t *out);

/**
 * `#X(b)(F_q)`; `budget = 0` selects the default.
 *
 * # Safety
 * `inst` must be a live handle and `out` a valid pointer.
 */
enum FfhStatus ffh_census_count(const struct FfhInstance *inst,
                                size_t b,
                                uint64_t q,
                                uint64_t budget,
                                uint64_t *out);

/**
 * Fitted dimension of X(b) over the primes `qs` (the instance's own primes
 * when `nq = 0`). `*dim` is -1 when some count is zero.
 *
 * # Safety
 * `qs` must point to `nq` values (or be null with `nq = 0`); `inst`, `dim`
 * and `slope` must be valid.
 */
enum FfhStatus ffh_census_dim(const struct FfhInstance *inst,
                              size_t b,
                              const uint64_t *qs,
                              size_t nq,
                              uint64_t budget,
                              int64_t *dim,
                              double *slope);

/**
 * X(b) over F_q as JSON (variables, equations, metadata).
 *
 * # Safety
 * `inst` must be a live handle and `out` a valid pointer.
 */
enum FfhStatus ffh_expand_json(const struct FfhInstance *inst, size_t b, uint64_t q, char **out);

/**
 * Parses a polynomial over F_p[t]; variables are taken from the text.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FfhStatus ffh_poly_parse(const char *text, uint64_t p, struct FfhPoly **out);

/**
 * Canonical text of a polynomial.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum FfhStatus ffh_poly_to_string(const struct FfhPoly *poly, char **out);

/**
 * Total degree, or -1 for the zero polynomial.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum FfhStatus ffh_poly_degree(const struct FfhPoly *poly, int64_t *out);

/**
 * # Safety
 * `poly` must be null or a handle from [`ffh_poly_parse`], freed once.
 */
void ffh_poly_free(struct FfhPoly *poly);

/**
 * Plücker height of the row space of a matrix given as a JSON array of rows
 * of polynomial strings in `t`.
 *
 * # Safety
 * `matrix_json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FfhStatus ffh_lattice_height(const char *matrix_json, uint64_t p, size_t *out);

/**
 * Number of pairwise distinct solutions in the `2^n` Pell family over F_q; `q = 0`
 * picks the first prime carrying the family and reports it in `q_out`
 * (which may be null).
 *
 * # Safety
 * `count` must be valid; `q_out` must be null or valid.
 */
enum FfhStatus ffh_pell_family_count(size_t n, uint64_t q, size_t *count, uint64_t *q_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FFHEIGHT_H */
