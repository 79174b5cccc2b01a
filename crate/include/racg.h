#ifndef RACG_H
#define RACG_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Values are stable.
 */
typedef enum RacgStatus {
  RACG_STATUS_OK = 0,
  /**
   * Null pointer, malformed UTF-8, malformed JSON, unknown name.
   */
  RACG_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Well-formed input outside the domain of the operation.
   */
  RACG_STATUS_PRECONDITION = 2,
  /**
   * An internal consistency check contradicted a proven statement.
   */
  RACG_STATUS_LEMMA_VIOLATION = 3,
  RACG_STATUS_RESOURCE_LIMIT = 4,
  /**
   * A certificate failed validation.
   */
  RACG_STATUS_INVALID_CERTIFICATE = 5,
  RACG_STATUS_INTERNAL = 6,
} RacgStatus;

/**
 * Opaque handle to a flag complex.
 */
typedef struct RacgComplex RacgComplex;

/**
 * Counts reported by [`racg_verify_cert`].
 */
typedef struct RacgVerifySummary {
  size_t nodes;
  size_t suspension_leaves;
  size_t andreev_leaves;
  size_t max_depth;
} RacgVerifySummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or an empty
 * string. Valid until the next library call on the same thread.
 */
const char *racg_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *racg_version(void);

/**
 * Parses a complex from JSON (`flag-graph` or flag `simplicial` format).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum RacgStatus racg_complex_from_json(const char *json, struct RacgComplex **out);

/**
 * Looks up a built-in example such as `"pentagon"` or `"gon-7"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum RacgStatus racg_complex_from_corpus(const char *name, struct RacgComplex **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `c` must come from this library and not be freed twice.
 */
void racg_complex_free(struct RacgComplex *c);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void racg_string_free(char *s);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RacgStatus racg_complex_vertex_count(const struct RacgComplex *c, size_t *out);

/**
 * Writes `f_{-1}, f_0, …` into `buf`. `*len` receives the full length;
 * if it exceeds `cap` nothing is written and `InvalidArgument` is
 * returned, so callers can query the size with `cap = 0`.
 *
 * # Safety
 * `buf` must have room for `cap` values (may be null when `cap` is 0).
 */
enum RacgStatus racg_complex_f_vector(const struct RacgComplex *c,
                                      uint64_t *buf,
                                      size_t cap,
                                      size_t *len);

/**
 * κ(L) as an exact rational string such as `"-1/4"`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RacgStatus racg_complex_kappa(const struct RacgComplex *c, char **out);

/**
 * Serialises the complex in `flag-graph` JSON.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RacgStatus racg_complex_to_json(const struct RacgComplex *c, char **out);

/**
 * Euler characteristic of the commutator cover P_L.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RacgStatus racg_commutator_cover_euler(const struct RacgComplex *c, int64_t *out);

/**
 * Evaluates an ℓ²-Betti expression such as `"(join (points 3) (points 3))"`
 * and returns the result as JSON.
 *
 * # Safety
 * `expr` must be a NUL-terminated string; `out` must be writable.
 */
enum RacgStatus racg_l2_betti_expr(const char *expr, char **out);

/**
 * Certifies a flag 2-sphere and returns the certificate as JSON.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RacgStatus racg_certify_s2(const struct RacgComplex *c, char **out);

/**
 * Validates a certificate produced by [`racg_certify_s2`].
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` may be null.
 */
enum RacgStatus racg_verify_cert(const char *json, struct RacgVerifySummary *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* RACG_H */
