#ifndef MOUFANG_H
#define MOUFANG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum {
  MOUFANG_STATUS_OK = 0,
  MOUFANG_STATUS_NULL_POINTER = 1,
  MOUFANG_STATUS_INVALID_FIELD = 2,
  MOUFANG_STATUS_TOO_LARGE = 3,
  MOUFANG_STATUS_INVALID_TABLE = 4,
  MOUFANG_STATUS_NOT_FOUND = 5,
  MOUFANG_STATUS_OUT_OF_RANGE = 6,
  MOUFANG_STATUS_CHECK_FAILED = 7,
  MOUFANG_STATUS_PARSE = 8,
  MOUFANG_STATUS_INTERNAL = 9,
} MoufangStatus;

/**
 * A finite field GF(p^n).
 */
typedef struct MoufangField MoufangField;

/**
 * A finite loop given by its Cayley table.
 */
typedef struct MoufangLoop MoufangLoop;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *moufang_status_message(MoufangStatus status);

/**
 * Creates GF(p^n).
 *
 * # Safety
 * `out` must be null or valid for writing one pointer.
 */
MoufangStatus moufang_field_new(uint32_t p, uint32_t n, MoufangField **out);

/**
 * # Safety
 * `field` must be null or a pointer from `moufang_field_new` not yet freed.
 */
void moufang_field_free(MoufangField *field);

/**
 * Field order `q`, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live field handle.
 */
uint32_t moufang_field_order(const MoufangField *field);

/**
 * Product of two elements given by index `Σ c_i p^i`.
 *
 * # Safety
 * `field` must be a live field handle; `out` valid for one `u32`.
 */
MoufangStatus moufang_field_mul(const MoufangField *field, uint32_t a, uint32_t b, uint32_t *out);

/**
 * Inverse of a nonzero element.
 *
 * # Safety
 * `field` must be a live field handle; `out` valid for one `u32`.
 */
MoufangStatus moufang_field_inv(const MoufangField *field, uint32_t a, uint32_t *out);

/**
 * # Safety
 * `field` must be a live field handle; `out` valid for one `bool`.
 */
MoufangStatus moufang_field_is_closed_under_sqrt(const MoufangField *field, bool *out);

/**
 * Square-root closure of GF(p^n) and whether it disagrees with the
 * even-degree claim. `disagrees` is -1 in characteristic 2, else 0 or 1.
 *
 * # Safety
 * `closed` and `disagrees` must be valid for writing.
 */
MoufangStatus moufang_classify(uint32_t p, uint32_t n, bool *closed, int32_t *disagrees);

/**
 * Builds a loop from a row-major table of `order * order` entries with
 * identity at index 0.
 *
 * # Safety
 * `table` must point to `order * order` readable `u32`s; `out` valid for one pointer.
 */
MoufangStatus moufang_loop_from_table(size_t order, const uint32_t *table, MoufangLoop **out);

/**
 * Parses the text table format (`order n` followed by `n` rows).
 *
 * # Safety
 * `text_in` must be a NUL-terminated string; `out` valid for one pointer.
 */
MoufangStatus moufang_loop_parse(const char *text_in, MoufangLoop **out);

/**
 * A loop from the fixed corpus, e.g. `"Q8"` or `"chein-D4"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` valid for one pointer.
 */
MoufangStatus moufang_corpus_loop(const char *name, MoufangLoop **out);

/**
 * `M(GF(p^n)) = M0/Z(M0)`, for `q <= 3`.
 *
 * # Safety
 * `out` must be valid for one pointer.
 */
MoufangStatus moufang_paige_loop(uint32_t p, uint32_t n, MoufangLoop **out);

/**
 * # Safety
 * `lp` must be null or a live loop handle.
 */
void moufang_loop_free(MoufangLoop *lp);

/**
 * Loop order, or 0 for a null handle.
 *
 * # Safety
 * `lp` must be null or a live loop handle.
 */
size_t moufang_loop_order(const MoufangLoop *lp);

/**
 * # Safety
 * `lp` must be a live loop handle; `out` valid for one `usize`.
 */
MoufangStatus moufang_loop_mul(const MoufangLoop *lp, size_t a, size_t b, size_t *out);

/**
 * # Safety
 * `lp` must be a live loop handle; `out` valid for one `bool`.
 */
MoufangStatus moufang_loop_is_moufang(const MoufangLoop *lp, bool *out);

/**
 * # Safety
 * `lp` must be a live loop handle; `out` valid for one `bool`.
 */
MoufangStatus moufang_loop_is_associative(const MoufangLoop *lp, bool *out);

/**
 * # Safety
 * `lp` must be a live loop handle; `out` valid for one `usize`.
 */
MoufangStatus moufang_loop_center_size(const MoufangLoop *lp, size_t *out);

/**
 * Central nilpotency class, or -1 when the loop is not centrally nilpotent.
 *
 * # Safety
 * `lp` must be a live loop handle; `out` valid for one `i32`.
 */
MoufangStatus moufang_loop_nilpotency_class(const MoufangLoop *lp, int32_t *out);

/**
 * Least `k` with `(ωQ)^k = 0` in GF(p^n)Q, or -1 when the powers stabilize
 * at a nonzero ideal.
 *
 * # Safety
 * `lp` must be a live loop handle; `out` valid for one `i32`.
 */
MoufangStatus moufang_omega_nilpotency_index(const MoufangLoop *lp,
                                             uint32_t p,
                                             uint32_t n,
                                             int32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MOUFANG_H */
