#ifndef CROSSINGS_H
#define CROSSINGS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

// Result of every fallible call.
typedef enum CrossingsStatus {
  CROSSINGS_STATUS_OK = 0,
  CROSSINGS_STATUS_NULL_POINTER = 1,
  CROSSINGS_STATUS_INVALID_INPUT = 2,
  // e.g. theta applied to a permutation containing 321
  CROSSINGS_STATUS_DOMAIN = 3,
  CROSSINGS_STATUS_OUT_OF_RANGE = 4,
  // a coefficient does not fit in 64 bits
  CROSSINGS_STATUS_OVERFLOW = 5,
  CROSSINGS_STATUS_BUFFER_TOO_SMALL = 6,
  CROSSINGS_STATUS_INTERNAL = 7,
} CrossingsStatus;

// Opaque permutation handle.
typedef struct CrossingsPermutation CrossingsPermutation;

// Opaque polynomial in `q` with integer coefficients.
typedef struct CrossingsPoly CrossingsPoly;

// The classic statistics of one permutation.
typedef struct CrossingsStats {
  uint32_t crs;
  uint32_t nes;
  uint32_t inv;
  uint32_t exc;
  uint32_t fp;
  uint32_t des;
  uint32_t maj;
} CrossingsStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a permutation from `len` values, which must be `1..=len` in some
// order.
//
// # Safety
// `values` must point to `len` readable `uint32_t` (or be null when `len`
// is 0); `out` must be writable.
enum CrossingsStatus crossings_perm_new(const uint32_t *values,
                                        size_t len,
                                        struct CrossingsPermutation **out);

// Parses one-line notation such as `"4735126"` or `"4,7,3,5,1,2,6"`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum CrossingsStatus crossings_perm_parse(const char *text, struct CrossingsPermutation **out);

// Releases a permutation. Null is ignored.
//
// # Safety
// `p` must come from this library and not be freed twice.
void crossings_perm_free(struct CrossingsPermutation *p);

// Length of the permutation, 0 for null.
//
// # Safety
// `p` must be null or a live handle.
size_t crossings_perm_len(const struct CrossingsPermutation *p);

// Copies the one-line notation into `buf`, which must hold
// `crossings_perm_len(p)` values.
//
// # Safety
// `p` must be a live handle and `buf` must have room for `cap` values.
enum CrossingsStatus crossings_perm_values(const struct CrossingsPermutation *p,
                                           uint32_t *buf,
                                           size_t cap);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum CrossingsStatus crossings_perm_stats(const struct CrossingsPermutation *p,
                                          struct CrossingsStats *out);

// The crossing-preserving bijection from 321-avoiders to 132-avoiders.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum CrossingsStatus crossings_theta(const struct CrossingsPermutation *p,
                                     struct CrossingsPermutation **out);

// Inverse of [`crossings_theta`]; the input must avoid 132.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum CrossingsStatus crossings_theta_inverse(const struct CrossingsPermutation *p,
                                             struct CrossingsPermutation **out);

// Theta after reverse-complement-inverse; keeps fixed points, excedances
// and crossings.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum CrossingsStatus crossings_gamma(const struct CrossingsPermutation *p,
                                     struct CrossingsPermutation **out);

// Sum of `q^crs` over the permutations of length `n` avoiding every
// pattern in the comma-separated list `patterns` (empty for none).
//
// # Safety
// `patterns` must be a NUL-terminated string; `out` must be writable.
enum CrossingsStatus crossings_distribution(size_t n,
                                            const char *patterns,
                                            struct CrossingsPoly **out);

// Number of stored coefficients: degree + 1, or 0 for the zero polynomial.
//
// # Safety
// `p` must be null or a live handle.
size_t crossings_poly_len(const struct CrossingsPoly *p);

// Coefficient of `q^e`; zero past the degree.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum CrossingsStatus crossings_poly_coeff(const struct CrossingsPoly *p, size_t e, int64_t *out);

// Text form such as `"11 + 4*q + q^2"`; release with
// [`crossings_string_free`].
//
// # Safety
// `p` must be null or a live handle.
char *crossings_poly_to_string(const struct CrossingsPoly *p);

// # Safety
// `p` must come from this library and not be freed twice.
void crossings_poly_free(struct CrossingsPoly *p);

// # Safety
// `s` must come from this library and not be freed twice.
void crossings_string_free(char *s);

// Message for the last failed call on this thread, empty after a
// success. Valid until the next call on the same thread.
const char *crossings_last_error(void);

// Library version as a static NUL-terminated string.
const char *crossings_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CROSSINGS_H */
