#ifndef CONGRUENCE_EULER_H
#define CONGRUENCE_EULER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  CE_STATUS_OK = 0,
  CE_STATUS_NULL_POINTER = 1,
  CE_STATUS_INVALID_INPUT = 2,
  CE_STATUS_CONSISTENCY = 3,
  CE_STATUS_INTERNAL = 4,
} CeStatus;

typedef enum {
  CE_GROUP_GL = 0,
  CE_GROUP_SL = 1,
  CE_GROUP_GAMMA1 = 2,
  CE_GROUP_GAMMA1_SL = 3,
} CeGroup;

/**
 * Opaque result of one Euler characteristic computation.
 */
typedef struct CeChiResult CeChiResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes `χ_h(group_m, V_weight)`. Pass `p = 0` for the groups that take no prime.
 * On success `*out` owns a handle to release with [`ce_chi_result_free`].
 *
 * # Safety
 * `weight` must point to `weight_len` readable `int64_t` values and `out` must be
 * valid for writes.
 */
CeStatus ce_chi_compute(CeGroup group,
                        size_t m,
                        uint64_t p,
                        const int64_t *weight,
                        size_t weight_len,
                        CeChiResult **out);

/**
 * # Safety
 * `handle` must be null or a handle from [`ce_chi_compute`] not yet freed.
 */
void ce_chi_result_free(CeChiResult *handle);

/**
 * The Euler characteristic as `"num/den"`, or a bare integer when `den = 1`.
 *
 * # Safety
 * `handle` must be a live handle and `out` valid for writes.
 */
CeStatus ce_chi_result_value(const CeChiResult *handle, char **out);

/**
 * The full result, breakdown included, as JSON.
 *
 * # Safety
 * `handle` must be a live handle and `out` valid for writes.
 */
CeStatus ce_chi_result_json(const CeChiResult *handle, char **out);

/**
 * Number of torsion classes contributing to the result.
 *
 * # Safety
 * `handle` must be a live handle and `out` valid for writes.
 */
CeStatus ce_chi_result_breakdown_len(const CeChiResult *handle, size_t *out);

/**
 * Number of torsion classes of `GL_m(ℤ)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
CeStatus ce_class_count(size_t m, size_t *out);

/**
 * The audit report over `primes` and the given weight bound, as JSON.
 *
 * # Safety
 * `primes` must point to `primes_len` readable values and `out` must be valid for writes.
 */
CeStatus ce_audit_json(const uint64_t *primes, size_t primes_len, uint64_t bound, char **out);

/**
 * Copy of the last error message on this thread, or null if there was none.
 */
char *ce_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ce_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONGRUENCE_EULER_H */
