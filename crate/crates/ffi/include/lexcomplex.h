#ifndef LEXCOMPLEX_H
#define LEXCOMPLEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LcStatus {
  LC_STATUS_OK = 0,
  LC_STATUS_NULL_POINTER = 1,
  LC_STATUS_INVALID_INPUT = 2,
  LC_STATUS_INVALID_MATROID = 3,
  LC_STATUS_NOT_A_BASIS = 4,
  LC_STATUS_RESOURCE_LIMIT = 5,
  LC_STATUS_BUFFER_TOO_SMALL = 6,
  LC_STATUS_PANIC = 7,
} LcStatus;

typedef enum LcTermOrder {
  LC_TERM_ORDER_LEX = 0,
  LC_TERM_ORDER_GRLEX = 1,
} LcTermOrder;

/**
 * A simplicial complex given by its faces.
 */
typedef struct LcComplex LcComplex;

/**
 * A validated matroid with its own cache of standard complexes.
 */
typedef struct LcMatroid LcMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *lc_last_error_message(void);

/**
 * Builds a matroid from a JSON descriptor (`bases`, `uniform`,
 * `transversal` or `lattice_path`).
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum LcStatus lc_matroid_from_json(const char *json, struct LcMatroid **out);

/**
 * `U_{r,n}` on `{1,…,n}`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LcStatus lc_matroid_uniform(int64_t n, int64_t r, struct LcMatroid **out);

/**
 * The lattice path matroid between boundary words over `e`/`n`.
 *
 * # Safety
 * `upper` and `lower` must be nul-terminated strings and `out` valid.
 */
enum LcStatus lc_matroid_lattice_path(const char *upper, const char *lower, struct LcMatroid **out);

/**
 * # Safety
 * `m` must be null or a handle from this library not yet freed.
 */
void lc_matroid_free(struct LcMatroid *m);

/**
 * # Safety
 * `m` must be a live handle and `out` valid.
 */
enum LcStatus lc_matroid_rank(const struct LcMatroid *m, size_t *out);

/**
 * # Safety
 * `m` must be a live handle and `out` valid.
 */
enum LcStatus lc_matroid_num_bases(const struct LcMatroid *m, size_t *out);

/**
 * The lexicographic standard complex of `m` as a new handle.
 *
 * # Safety
 * `m` must be a live handle and `out` valid.
 */
enum LcStatus lc_lex_standard_complex(const struct LcMatroid *m, struct LcComplex **out);

/**
 * Standard complex of a 0/1 configuration given as
 * `{"coords":[...],"points":[[0,1,...],...]}`, by exact elimination.
 *
 * # Safety
 * `config_json` must be a nul-terminated string and `out` valid.
 */
enum LcStatus lc_oracle_standard_complex(const char *config_json,
                                         enum LcTermOrder order,
                                         struct LcComplex **out);

/**
 * # Safety
 * `c` must be null or a handle from this library not yet freed.
 */
void lc_complex_free(struct LcComplex *c);

/**
 * # Safety
 * `c` must be a live handle and `out` valid.
 */
enum LcStatus lc_complex_num_faces(const struct LcComplex *c, size_t *out);

/**
 * Writes the f-vector into `buf`. `*len` receives its length even when
 * `cap` is too small.
 *
 * # Safety
 * `c` must be a live handle, `buf` valid for `cap` writes, `len` valid.
 */
enum LcStatus lc_complex_f_vector(const struct LcComplex *c, size_t *buf, size_t cap, size_t *len);

/**
 * Faces as a JSON array of arrays, in canonical order. Free the result
 * with `lc_string_free`.
 *
 * # Safety
 * `c` must be a live handle and `out` valid.
 */
enum LcStatus lc_complex_to_json(const struct LcComplex *c, char **out);

/**
 * `Λ_M(B)` for a basis given as `basis_len` labels.
 *
 * # Safety
 * `m` must be a live handle, `basis` valid for `basis_len` reads, `buf`
 * valid for `cap` writes and `len` valid.
 */
enum LcStatus lc_lambda_of_basis(const struct LcMatroid *m,
                                 const uint32_t *basis,
                                 size_t basis_len,
                                 uint32_t *buf,
                                 size_t cap,
                                 size_t *len);

/**
 * The marking-path statistic of `path` with respect to `lower`.
 *
 * # Safety
 * `path` and `lower` must be nul-terminated strings, `buf` valid for `cap`
 * writes and `len` valid.
 */
enum LcStatus lc_statistic(const char *path,
                           const char *lower,
                           uint32_t *buf,
                           size_t cap,
                           size_t *len);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void lc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEXCOMPLEX_H */
