#ifndef KINTERCHANGE_H
#define KINTERCHANGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; values 1 to 17 match the library's error codes.
 */
enum KiStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  KI_STATUS_OK = 0,
  KI_STATUS_DUPLICATE_ELEMENT = 1,
  KI_STATUS_ELEMENT_OUT_OF_RANGE = 2,
  KI_STATUS_ORDER_OUT_OF_RANGE = 3,
  KI_STATUS_PERMUTATION_SYNTAX = 4,
  KI_STATUS_WINDOW_OUT_OF_BOUNDS = 5,
  KI_STATUS_INVALID_K = 6,
  KI_STATUS_INDEX_OUT_OF_RANGE = 7,
  KI_STATUS_ARITY_MISMATCH = 8,
  KI_STATUS_MISSING_TABLE_ENTRY = 9,
  KI_STATUS_CAP_EXCEEDED = 10,
  KI_STATUS_MISSING_OBJECTIVE = 11,
  KI_STATUS_EMPTY_OPTIMA = 12,
  KI_STATUS_PARSE_ERROR = 13,
  KI_STATUS_INCOMPLETE_TABLE = 14,
  KI_STATUS_INVALID_PARAMS = 15,
  KI_STATUS_INVALID_CONFIG = 16,
  KI_STATUS_IO_ERROR = 17,
  KI_STATUS_NULL_POINTER = 100,
  KI_STATUS_BUFFER_TOO_SMALL = 101,
  KI_STATUS_INVALID_UTF8 = 102,
  KI_STATUS_PANIC = 103,
};
#ifndef __cplusplus
typedef int32_t KiStatus;
#endif // __cplusplus

/**
 * Opaque objective handle.
 */
typedef struct KiObjective KiObjective;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *ki_last_error_message(void);

/**
 * Static name of a status code, e.g. `"InvalidK"`.
 */
const char *ki_status_name(int32_t status);

const char *ki_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void ki_string_free(char *s);

/**
 * Releases an objective. Null is ignored.
 *
 * # Safety
 * `h` must come from this library and must not be used afterwards.
 */
void ki_objective_free(struct KiObjective *h);

/**
 * The built-in four-element reference table.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
KiStatus ki_objective_table1(struct KiObjective **out);

/**
 * Inversion count of order `n`; `n = 0` accepts every order.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
KiStatus ki_objective_inversion(size_t n, struct KiObjective **out);

/**
 * `g_k(s)`: fewest k-interchanges turning `s` into `target`.
 *
 * # Safety
 * `target` must point to `n` readable bytes; `out` must be valid for
 * writing one pointer.
 */
KiStatus ki_objective_search_distance(size_t n,
                                      size_t k,
                                      const uint8_t *target,
                                      struct KiObjective **out);

/**
 * Objective from a JSON document.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be valid for writing
 * one pointer.
 */
KiStatus ki_objective_from_json(const char *json, struct KiObjective **out);

/**
 * Objective from a JSON file.
 *
 * # Safety
 * `path` must be a nul-terminated string; `out` must be valid for writing
 * one pointer.
 */
KiStatus ki_objective_load(const char *path, struct KiObjective **out);

/**
 * Evaluates `f` at a permutation; the value is `numer / denom` in lowest
 * terms with `denom > 0`.
 *
 * # Safety
 * `perm` must point to `len` readable bytes; `numer` and `denom` must be
 * valid for writing.
 */
KiStatus ki_evaluate(const struct KiObjective *f,
                     const uint8_t *perm,
                     size_t len,
                     int64_t *numer,
                     int64_t *denom);

/**
 * Writes the distinct k-interchange neighbors of `perm` in lexicographic
 * order, `len` bytes each, into `buf` (room for `capacity` rows).
 * `*count` always receives the number of neighbors; if it exceeds
 * `capacity` nothing is written and `KI_STATUS_BUFFER_TOO_SMALL` is
 * returned. Pass `capacity = 0` to query the size.
 *
 * # Safety
 * `perm` must point to `len` readable bytes; `buf` must be valid for
 * `capacity * len` bytes (may be null when `capacity` is 0); `count` must
 * be valid for writing.
 */
KiStatus ki_neighborhood(const uint8_t *perm,
                         size_t len,
                         size_t k,
                         uint8_t *buf,
                         size_t capacity,
                         size_t *count);

/**
 * Landscape report of `f` at window size `k` in `mode` (`"moves"`,
 * `"strict"` or `"weak"`), as JSON.
 *
 * # Safety
 * `mode` must be a nul-terminated string; `out` must be valid for writing
 * one pointer.
 */
KiStatus ki_analyze_json(const struct KiObjective *f, size_t k, const char *mode, char **out);

/**
 * Runs the strategy given as a JSON config and returns the run record as
 * JSON.
 *
 * # Safety
 * `config_json` must be a nul-terminated string; `out` must be valid for
 * writing one pointer.
 */
KiStatus ki_search_json(const struct KiObjective *f, const char *config_json, char **out);

/**
 * Runs the structural verification suite. `*all_passed` is 1 when every
 * check passes; the full report is returned as JSON when `out` is not null.
 *
 * # Safety
 * `all_passed` must be valid for writing; `out` must be null or valid for
 * writing one pointer.
 */
KiStatus ki_verify(int32_t *all_passed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KINTERCHANGE_H */
