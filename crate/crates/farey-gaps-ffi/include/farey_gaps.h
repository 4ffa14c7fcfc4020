#ifndef FAREY_GAPS_H
#define FAREY_GAPS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  FG_ROUTE_ENUMERATION = 0,
  FG_ROUTE_CLOSED_FORM = 1,
} FgRoute;

typedef enum {
  FG_STATUS_OK = 0,
  FG_STATUS_NULL_POINTER = 1,
  FG_STATUS_INVALID_UTF8 = 2,
  FG_STATUS_INVALID_ARGUMENT = 3,
  FG_STATUS_UNSUPPORTED = 4,
  FG_STATUS_OUT_OF_RANGE = 5,
  FG_STATUS_PANIC = 6,
} FgStatus;

typedef struct FgHistogram FgHistogram;

/**
 * An exact proportion, or an enclosing interval from the bounded route.
 */
typedef struct FgNu FgNu;

/**
 * The Farey-triangle region of one index tuple.
 */
typedef struct FgRegion FgRegion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of an `FgStatus` value. Never free the result.
 */
const char *fg_status_message(int status);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void fg_string_free(char *s);

/**
 * Writes the continuant of `tuple` (e.g. `"3,2^4,1,6"`) as a decimal string.
 *
 * # Safety
 * `tuple` must be a NUL-terminated string and `out` a valid pointer.
 */
FgStatus fg_continuant(const char *tuple, char **out);

/**
 * # Safety
 * `tuple` must be a NUL-terminated string and `out` a valid pointer.
 */
FgStatus fg_region_new(const char *tuple, FgRegion **out);

/**
 * # Safety
 * `r` must be null or a handle from [`fg_region_new`], not yet freed.
 */
void fg_region_free(FgRegion *r);

/**
 * Area as `"p/q"`.
 *
 * # Safety
 * `r` must be a live region handle and `out` a valid pointer.
 */
FgStatus fg_region_area(const FgRegion *r, char **out);

/**
 * # Safety
 * `r` must be a live region handle and `out` a valid pointer.
 */
FgStatus fg_region_is_empty(const FgRegion *r, bool *out);

/**
 * # Safety
 * `r` must be a live region handle and `out` a valid pointer.
 */
FgStatus fg_region_vertex_count(const FgRegion *r, size_t *out);

/**
 * Vertex `i` in canonical order, as two `"p/q"` strings.
 *
 * # Safety
 * `r` must be a live region handle; `x` and `y` must be valid pointers.
 */
FgStatus fg_region_vertex(const FgRegion *r, size_t i, char **x, char **y);

/**
 * Canonical text form of the region's tuple.
 *
 * # Safety
 * `r` must be a live region handle and `out` a valid pointer.
 */
FgStatus fg_region_tuple(const FgRegion *r, char **out);

/**
 * Exact `nu(r; d, c0)`; `route` is an `FgRoute` value. Only `d` in {2, 3} with `c0 = 0` is exact.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
FgStatus fg_nu_exact(size_t r, uint64_t d, uint64_t c0, int route, FgNu **out);

/**
 * Interval for `nu(r; d, c0)` from tuples with entries at most `cutoff`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
FgStatus fg_nu_bounded(size_t r, uint64_t d, uint64_t c0, uint64_t cutoff, FgNu **out);

/**
 * # Safety
 * `v` must be null or a handle from `fg_nu_*`, not yet freed.
 */
void fg_nu_free(FgNu *v);

/**
 * Whether the value is exact rather than an interval.
 *
 * # Safety
 * `v` must be a live handle and `out` a valid pointer.
 */
FgStatus fg_nu_is_exact(const FgNu *v, bool *out);

/**
 * Symbolic form such as `"6 - 2*pi/sqrt(3) - 2*ln(3)"`, or `"[lo, hi]"` for an interval.
 *
 * # Safety
 * `v` must be a live handle and `out` a valid pointer.
 */
FgStatus fg_nu_string(const FgNu *v, char **out);

/**
 * Decimal rendering rounded to `digits` places (the lower end for an interval).
 *
 * # Safety
 * `v` must be a live handle and `out` a valid pointer.
 */
FgStatus fg_nu_decimal(const FgNu *v, size_t digits, char **out);

/**
 * Scans one period of the Farey sequence of order `q`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
FgStatus fg_scan(uint64_t q, uint64_t d, uint64_t c0, size_t r_max, FgHistogram **out);

/**
 * # Safety
 * `h` must be null or a handle from [`fg_scan`], not yet freed.
 */
void fg_histogram_free(FgHistogram *h);

/**
 * Number of gaps with exactly `r` interior fractions, for `r <= r_max`.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
FgStatus fg_histogram_count(const FgHistogram *h, size_t r, uint64_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
FgStatus fg_histogram_overflow(const FgHistogram *h, uint64_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
FgStatus fg_histogram_coloured_total(const FgHistogram *h, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FAREY_GAPS_H */
