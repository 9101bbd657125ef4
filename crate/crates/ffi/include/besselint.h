#ifndef BESSELINT_H
#define BESSELINT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Integrand kernel: `cosh^mu t` or `sinh^mu t`.
 */
typedef enum BesselintKernel {
  BESSELINT_KERNEL_COSH = 0,
  BESSELINT_KERNEL_SINH = 1,
} BesselintKernel;

/**
 * Result code of every call.
 */
typedef enum BesselintStatus {
  BESSELINT_STATUS_OK = 0,
  BESSELINT_STATUS_DOMAIN = 1,
  BESSELINT_STATUS_UNSUPPORTED_PARITY = 2,
  BESSELINT_STATUS_UNSUPPORTED = 3,
  BESSELINT_STATUS_CONVERGENCE = 4,
  BESSELINT_STATUS_NULL_POINTER = 5,
  BESSELINT_STATUS_BUFFER_TOO_SMALL = 6,
  BESSELINT_STATUS_PANIC = 7,
} BesselintStatus;

/**
 * Exact coefficient table of one integral.
 */
typedef struct BesselintTable BesselintTable;

/**
 * Complex number with C layout.
 */
typedef struct BesselintComplex {
  double re;
  double im;
} BesselintComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or null if the last
 * call succeeded. Valid until the next call on the same thread.
 */
const char *besselint_last_error_message(void);

/**
 * Builds the table for `kernel`, `mu`, `nu` and stores a new handle in `out`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum BesselintStatus besselint_table_new(enum BesselintKernel kernel,
                                         int64_t mu,
                                         int64_t nu,
                                         struct BesselintTable **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `table` must be null or a handle from [`besselint_table_new`] not yet freed.
 */
void besselint_table_free(struct BesselintTable *table);

/**
 * Polynomial degree in `1/z`.
 *
 * # Safety
 * `table` must be a live handle; `out` must be valid for writes.
 */
enum BesselintStatus besselint_table_degree(const struct BesselintTable *table, uint32_t *out);

/**
 * Exponent `q` of the prefactor `pi e^{-z} / (2^q z)`.
 *
 * # Safety
 * `table` must be a live handle; `out` must be valid for writes.
 */
enum BesselintStatus besselint_table_prefactor_pow2(const struct BesselintTable *table,
                                                    uint32_t *out);

/**
 * Writes coefficient `p` as a NUL-terminated decimal (`"184320"` or `"3/2"`).
 *
 * `needed` (optional) receives the buffer size including the terminator.
 * Returns `BufferTooSmall` without writing when `len` is insufficient;
 * `buf` may then be null.
 *
 * # Safety
 * `table` must be a live handle; `buf` must be valid for `len` bytes;
 * `needed` must be null or valid for writes.
 */
enum BesselintStatus besselint_table_coeff_string(const struct BesselintTable *table,
                                                  uint32_t p,
                                                  char *buf,
                                                  size_t len,
                                                  size_t *needed);

/**
 * Coefficient `p` rounded to double.
 *
 * # Safety
 * `table` must be a live handle; `out` must be valid for writes.
 */
enum BesselintStatus besselint_table_coeff_f64(const struct BesselintTable *table,
                                               uint32_t p,
                                               double *out);

/**
 * Evaluates the closed form held by `table` at `z`.
 *
 * # Safety
 * `table` must be a live handle; `out` must be valid for writes.
 */
enum BesselintStatus besselint_table_eval(const struct BesselintTable *table,
                                          struct BesselintComplex z,
                                          struct BesselintComplex *out);

/**
 * Closed-form value of the integral at `z`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum BesselintStatus besselint_eval(enum BesselintKernel kernel,
                                    int64_t mu,
                                    int64_t nu,
                                    struct BesselintComplex z,
                                    struct BesselintComplex *out);

/**
 * Quadrature value of the integral at `z` for real `nu`, relative tolerance `tol`.
 *
 * On `Convergence` the best estimate is still written to `out` and `est_error`.
 *
 * # Safety
 * `out` must be valid for writes; `est_error` must be null or valid for writes.
 */
enum BesselintStatus besselint_oracle(enum BesselintKernel kernel,
                                      int64_t mu,
                                      double nu,
                                      struct BesselintComplex z,
                                      double tol,
                                      struct BesselintComplex *out,
                                      double *est_error);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BESSELINT_H */
