#ifndef YHECKE_H
#define YHECKE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum YhFamily {
  YH_FAMILY_FRAMED = 0,
  YH_FAMILY_CLASSICAL = 1,
  YH_FAMILY_SINGULAR = 2,
} YhFamily;

/**
 * Result code of every fallible call.
 */
typedef enum YhStatus {
  YH_STATUS_OK = 0,
  YH_STATUS_NULL_POINTER = 1,
  YH_STATUS_INVALID_UTF8 = 2,
  YH_STATUS_PARSE = 3,
  YH_STATUS_INVALID_ARGUMENT = 4,
  YH_STATUS_INCOMPATIBLE_KIND = 5,
  YH_STATUS_CONTEXT_MISMATCH = 6,
  YH_STATUS_BUFFER_TOO_SMALL = 7,
  YH_STATUS_INTERNAL = 8,
} YhStatus;

/**
 * A parsed braid word.
 */
typedef struct YhBraid YhBraid;

/**
 * An invariant value together with its regime.
 */
typedef struct YhValue YhValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread; empty if none. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *yh_last_error(void);

/**
 * Parse a braid word (`s1 -s2 t1^3 x1`, optional leading `n=<k>`).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` a writable pointer slot.
 */
enum YhStatus yh_braid_parse(const char *text, struct YhBraid **out);

/**
 * Number of strands of a braid.
 *
 * # Safety
 * `b` must be a live braid handle; `out` a writable `size_t`.
 */
enum YhStatus yh_braid_strands(const struct YhBraid *b, size_t *out);

/**
 * # Safety
 * `b` must be null or a braid handle not yet freed.
 */
void yh_braid_free(struct YhBraid *b);

/**
 * Invariant of the given family with formal `z`, for the E-system
 * solution indexed by the residues `subset[0..subset_len]` mod `d`.
 *
 * # Safety
 * `b` must be a live braid handle, `subset` valid for `subset_len` reads,
 * `out` a writable pointer slot.
 */
enum YhStatus yh_invariant(const struct YhBraid *b,
                           enum YhFamily family,
                           uint32_t d,
                           const uint32_t *subset,
                           size_t subset_len,
                           struct YhValue **out);

/**
 * Two-variable polynomial in `(u, z)` of a classical braid.
 *
 * # Safety
 * `b` must be a live braid handle; `out` a writable pointer slot.
 */
enum YhStatus yh_homflypt(const struct YhBraid *b, struct YhValue **out);

/**
 * One-variable specialization in `u` of a classical braid.
 *
 * # Safety
 * `b` must be a live braid handle; `out` a writable pointer slot.
 */
enum YhStatus yh_jones(const struct YhBraid *b, struct YhValue **out);

/**
 * Render a value as text into `buf` (capacity `cap`, NUL included).
 * `needed`, if non-null, receives the required capacity; when `cap` is too
 * small nothing is written and `BUFFER_TOO_SMALL` is returned.
 *
 * # Safety
 * `v` must be a live value handle; `buf` valid for `cap` writes or null
 * with `cap == 0`.
 */
enum YhStatus yh_value_render(const struct YhValue *v, char *buf, size_t cap, size_t *needed);

/**
 * Exact equality. Values from different regimes give `CONTEXT_MISMATCH`.
 *
 * # Safety
 * `a`, `b` must be live value handles; `out` a writable `bool`.
 */
enum YhStatus yh_value_equal(const struct YhValue *a, const struct YhValue *b, bool *out);

/**
 * # Safety
 * `v` must be null or a value handle not yet freed.
 */
void yh_value_free(struct YhValue *v);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* YHECKE_H */
