#ifndef QSU2_H
#define QSU2_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Route for Σ(L).
 */
typedef enum Qsu2Route {
  QSU2_ROUTE_LEMMA = 0,
  QSU2_ROUTE_KM = 1,
  QSU2_ROUTE_BOTH = 2,
} Qsu2Route;

/**
 * Result codes; the nonzero values match the command-line exit codes where
 * they overlap.
 */
typedef enum Qsu2Status {
  QSU2_STATUS_OK = 0,
  /**
   * Internal error or a false verdict.
   */
  QSU2_STATUS_FAILED = 1,
  QSU2_STATUS_INVALID_INPUT = 2,
  QSU2_STATUS_RESOURCE_LIMIT = 3,
  QSU2_STATUS_NULL_POINTER = 4,
  QSU2_STATUS_PANIC = 5,
} Qsu2Status;

/**
 * Opaque framed link handle.
 */
typedef struct Qsu2Link Qsu2Link;

/**
 * Opaque cyclotomic field handle.
 */
typedef struct Qsu2Ring Qsu2Ring;

/**
 * Field parameters.
 */
typedef struct Qsu2RingInfo {
  uint32_t p;
  uint32_t u;
  int32_t epsilon;
  uint32_t eight_bar;
  uintptr_t degree;
} Qsu2RingInfo;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *qsu2_version(void);

/**
 * Message of the last failed call on this thread, or NULL. The caller frees
 * it with `qsu2_string_free`.
 */
char *qsu2_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qsu2_string_free(char *s);

/**
 * Creates the cyclotomic field for the odd prime `p`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum Qsu2Status qsu2_ring_new(uint32_t p, struct Qsu2Ring **out);

/**
 * Releases a ring handle. NULL is ignored.
 *
 * # Safety
 * `ring` must come from `qsu2_ring_new` and not have been freed.
 */
void qsu2_ring_free(struct Qsu2Ring *ring);

/**
 * Fills `out` with the field parameters.
 *
 * # Safety
 * `ring` and `out` must be valid pointers.
 */
enum Qsu2Status qsu2_ring_info(const struct Qsu2Ring *ring, struct Qsu2RingInfo *out);

/**
 * Parses a JSON link document (fields `pd`, `free_loops`, `components`,
 * `framings`, `p`). Missing framings default to zero.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum Qsu2Status qsu2_link_from_json(const char *json, struct Qsu2Link **out);

/**
 * Looks up a catalog link. With `framings_len == 0` the catalog framings are
 * used, otherwise `framings` supplies one framing per component.
 *
 * # Safety
 * `name` must be a NUL-terminated string, `framings` must point to
 * `framings_len` values, and `out` must be a valid pointer.
 */
enum Qsu2Status qsu2_link_from_catalog(const char *name,
                                       const int64_t *framings,
                                       uintptr_t framings_len,
                                       struct Qsu2Link **out);

/**
 * Releases a link handle. NULL is ignored.
 *
 * # Safety
 * `link` must come from this library and not have been freed.
 */
void qsu2_link_free(struct Qsu2Link *link);

/**
 * Number of components, or 0 for NULL.
 *
 * # Safety
 * `link` must be NULL or a valid handle.
 */
uintptr_t qsu2_link_num_components(const struct Qsu2Link *link);

/**
 * Kauffman bracket of the link diagram, normalized so the trivial knot gives
 * 1, rendered as text such as "-A^4 - A^-4". `cache_dir` may be NULL.
 *
 * # Safety
 * `link` and `out` must be valid pointers; `cache_dir` NULL or a
 * NUL-terminated string.
 */
enum Qsu2Status qsu2_bracket(const struct Qsu2Link *link,
                             uintptr_t width_limit,
                             const char *cache_dir_path,
                             char **out);

/**
 * τ₂ₚ(M, θ) for the presentation `link` at the ring's p. `theta` lists
 * 0-based component indices. On success `out_json` receives the report as
 * JSON and `out_verdict` the exact membership verdict; a false verdict still
 * returns `QSU2_STATUS_OK`.
 *
 * # Safety
 * `ring`, `link`, `out_json` and `out_verdict` must be valid pointers;
 * `theta` must point to `theta_len` values; `cache_dir` NULL or a
 * NUL-terminated string.
 */
enum Qsu2Status qsu2_tau(const struct Qsu2Ring *ring,
                         const struct Qsu2Link *link,
                         const uintptr_t *theta,
                         uintptr_t theta_len,
                         enum Qsu2Route route,
                         uintptr_t width_limit,
                         const char *cache_dir_path,
                         char **out_json,
                         bool *out_verdict);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QSU2_H */
