#ifndef ZETA_BOUND_H
#define ZETA_BOUND_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ZbStatus {
  ZB_STATUS_OK = 0,
  ZB_STATUS_NULL_POINTER = 1,
  ZB_STATUS_INVALID_ARGUMENT = 2,
  ZB_STATUS_DOMAIN = 3,
  ZB_STATUS_INFEASIBLE = 4,
  ZB_STATUS_IO = 5,
  ZB_STATUS_PARSE = 6,
  ZB_STATUS_INTERNAL = 7,
} ZbStatus;

/**
 * Parameter set (k, theta, a0, t0).
 */
typedef struct ZbParams ZbParams;

/**
 * Record list loaded from, or written to, a record file.
 */
typedef struct ZbRecords ZbRecords;

/**
 * Closed interval [lo, hi].
 */
typedef struct ZbInterval {
  double lo;
  double hi;
} ZbInterval;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library on the same thread.
 */
const char *zb_last_error(void);

/**
 * Encloses |zeta(1/2+it)| for all t in [t_lo, t_hi]. `method` receives 0
 * for Euler-Maclaurin and 1 for Riemann-Siegel; it may be null.
 *
 * # Safety
 * `out` must be valid for writes; `method` must be null or valid.
 */
enum ZbStatus zb_abs_zeta_half(double t_lo, double t_hi, struct ZbInterval *out, uint32_t *method);

/**
 * Parses four decimal strings into a parameter handle.
 *
 * # Safety
 * Strings must be nul-terminated; `out` must be valid for writes.
 */
enum ZbStatus zb_params_new(const char *k,
                            const char *theta,
                            const char *a0,
                            const char *t0,
                            struct ZbParams **out);

/**
 * Parses `key = value` text with keys k, theta, a0, t0.
 *
 * # Safety
 * `text` must be nul-terminated; `out` must be valid for writes.
 */
enum ZbStatus zb_params_parse(const char *text, struct ZbParams **out);

/**
 * # Safety
 * `p` must be null or a handle from this library that was not yet freed.
 */
void zb_params_free(struct ZbParams *p);

/**
 * Writes whether every side condition holds.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum ZbStatus zb_params_feasible(const struct ZbParams *p, bool *out);

/**
 * Writes enclosures of D1..D5 to `out[0..5]`.
 *
 * # Safety
 * `p` must be a live handle; `out` must have room for five intervals.
 */
enum ZbStatus zb_chain_d(const struct ZbParams *p, struct ZbInterval *out);

/**
 * Certifies sup over t >= t0 of bound(t) / (t^(1/6) log t) <= target.
 *
 * # Safety
 * `p` must be a live handle; `sup` and `passed` must be valid for writes.
 */
enum ZbStatus zb_verify_large_t(const struct ZbParams *p,
                                double target,
                                struct ZbInterval *sup,
                                bool *passed);

/**
 * Certifies |zeta(1/2+it)| < constant t^(1/6) log t on [lo, hi].
 *
 * # Safety
 * `passed` must be valid for writes; `failures` may be null.
 */
enum ZbStatus zb_verify_range(double lo,
                              double hi,
                              double constant,
                              double piece_width,
                              uint32_t max_depth,
                              bool *passed,
                              uint64_t *failures);

/**
 * Runs a record sweep over [lo, hi], writes the file at `path` and returns
 * the records.
 *
 * # Safety
 * `path` must be nul-terminated; `out` must be valid for writes.
 */
enum ZbStatus zb_records_sweep(double lo,
                               double hi,
                               double piece_width,
                               const char *path,
                               struct ZbRecords **out);

/**
 * # Safety
 * `path` must be nul-terminated; `out` must be valid for writes.
 */
enum ZbStatus zb_records_read(const char *path, struct ZbRecords **out);

/**
 * Number of records; 0 for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
size_t zb_records_len(const struct ZbRecords *r);

/**
 * # Safety
 * `r` must be a live handle; `a` and `y` must be valid for writes.
 */
enum ZbStatus zb_records_get(const struct ZbRecords *r, size_t index, double *a, double *y);

/**
 * Four-decimal constant covering the records in [lo, hi).
 *
 * # Safety
 * `r` must be a live handle; `out` must be valid for writes.
 */
enum ZbStatus zb_records_table_constant(const struct ZbRecords *r,
                                        double lo,
                                        double hi,
                                        double *out);

/**
 * # Safety
 * `r` must be null or a handle from this library that was not yet freed.
 */
void zb_records_free(struct ZbRecords *r);

/**
 * Encloses 4 (t/2 pi)^(1/4).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZbStatus zb_lehman_bound(double t, struct ZbInterval *out);

/**
 * Crossing of 4 (t/2 pi)^(1/4) and constant t^(1/6) log t in [lo, hi].
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZbStatus zb_crossover(double lo,
                           double hi,
                           double constant,
                           double tol,
                           struct ZbInterval *out);

/**
 * Least Q with |zeta(1/2)| < constant Q^(1/6) log Q.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZbStatus zb_min_q(double constant, struct ZbInterval *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZETA_BOUND_H */
