#ifndef ELASTIC_MATROID_H
#define ELASTIC_MATROID_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EmStatus {
  EM_STATUS_OK = 0,
  EM_STATUS_NULL_POINTER = 1,
  EM_STATUS_INVALID_UTF8 = 2,
  EM_STATUS_PARSE = 3,
  EM_STATUS_INVALID_MATROID = 4,
  EM_STATUS_INVALID_PARAMETER = 5,
  EM_STATUS_UNKNOWN_CHECK = 6,
  EM_STATUS_IO = 7,
  EM_STATUS_PANIC = 8,
} EmStatus;

/**
 * Opaque matroid handle.
 */
typedef struct EmMatroid EmMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses one lex01 line (`n r bits`) into a new handle.
 *
 * # Safety
 * `line` is a NUL-terminated string; `out` is writable.
 */
enum EmStatus em_matroid_from_lex01(const char *line, struct EmMatroid **out);

/**
 * Builds a named matroid such as `U(2,4)`, `W(3)`, `THETA(4)` or `L8`.
 *
 * # Safety
 * `spec` is a NUL-terminated string; `out` is writable.
 */
enum EmStatus em_matroid_from_family(const char *spec, struct EmMatroid **out);

/**
 * # Safety
 * `m` is null or a handle from this library that has not been freed.
 */
void em_matroid_free(struct EmMatroid *m);

/**
 * Number of elements; 0 for a null handle.
 *
 * # Safety
 * `m` is null or a live handle.
 */
size_t em_matroid_size(const struct EmMatroid *m);

/**
 * Rank of the ground set; 0 for a null handle.
 *
 * # Safety
 * `m` is null or a live handle.
 */
size_t em_matroid_rank(const struct EmMatroid *m);

/**
 * # Safety
 * `m` is a live handle; `out` is writable.
 */
enum EmStatus em_is_3_connected(const struct EmMatroid *m, bool *out);

/**
 * Elastic elements as a bit mask (bit `i` set for element `i`).
 *
 * # Safety
 * `m` is a live handle; `out` is writable.
 */
enum EmStatus em_elastic_elements(const struct EmMatroid *m, uint32_t *out);

/**
 * `N`-elastic elements of `m` as a bit mask.
 *
 * # Safety
 * `m` and `n` are live handles; `out` is writable.
 */
enum EmStatus em_n_elastic_elements(const struct EmMatroid *m,
                                    const struct EmMatroid *n,
                                    uint32_t *out);

/**
 * Runs a check (or `all`) over a catalog specification and writes the JSON
 * reports to `out_json` and whether every check passed to `passed`. A
 * `max_n` of 0 means no limit. Free the JSON with [`em_string_free`].
 *
 * # Safety
 * `check` and `catalog` are NUL-terminated strings; `out_json` and `passed` are writable.
 */
enum EmStatus em_verify(const char *check,
                        const char *catalog,
                        size_t max_n,
                        char **out_json,
                        bool *passed);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *em_last_error_message(void);

/**
 * # Safety
 * `s` is null or a string returned by this library that has not been freed.
 */
void em_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ELASTIC_MATROID_H */
