#ifndef CUBEFACTOR_H
#define CUBEFACTOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CfStatus {
  CF_STATUS_OK = 0,
  CF_STATUS_NULL_POINTER = 1,
  CF_STATUS_INVALID_ARGUMENT = 2,
  CF_STATUS_CAP_EXCEEDED = 3,
  CF_STATUS_INVALID_FACTOR = 4,
  CF_STATUS_PARSE = 5,
  CF_STATUS_INTERNAL = 6,
} CfStatus;

typedef enum CfSequence {
  CF_SEQUENCE_FIBONACCI = 0,
  CF_SEQUENCE_LUCAS = 1,
  CF_SEQUENCE_PADOVAN = 2,
} CfSequence;

typedef enum CfFamily {
  CF_FAMILY_GAMMA = 0,
  CF_FAMILY_OMEGA = 1,
} CfFamily;

typedef enum CfPolyMethod {
  CF_POLY_METHOD_RECURRENCE = 0,
  CF_POLY_METHOD_CLOSED = 1,
  CF_POLY_METHOD_GENERATING_FUNCTION = 2,
} CfPolyMethod;

typedef enum CfExportFormat {
  CF_EXPORT_FORMAT_DOT = 0,
  CF_EXPORT_FORMAT_EDGE_LIST = 1,
} CfExportFormat;

typedef enum CfSolveMethod {
  CF_SOLVE_METHOD_EXACT = 0,
  CF_SOLVE_METHOD_GREEDY = 1,
  CF_SOLVE_METHOD_STRUCTURAL = 2,
} CfSolveMethod;

/**
 * Opaque factor handle. Vertex ids refer to the graph it was made from.
 */
typedef struct CfFactor CfFactor;

/**
 * Opaque graph handle.
 */
typedef struct CfGraph CfGraph;

/**
 * Opaque polynomial handle.
 */
typedef struct CfPolynomial CfPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null if the last
 * call succeeded. Valid until the next call on this thread.
 */
const char *cf_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *cf_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void cf_string_free(char *s);

/**
 * Term `n` of a sequence as a decimal string.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one pointer.
 */
enum CfStatus cf_sequence_term(enum CfSequence seq, size_t n, char **out);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage for one pointer.
 */
enum CfStatus cf_polynomial_new(enum CfFamily family,
                                size_t n,
                                enum CfPolyMethod method,
                                struct CfPolynomial **out);

/**
 * # Safety
 * `p` must be null or a handle from [`cf_polynomial_new`], not yet freed.
 */
void cf_polynomial_free(struct CfPolynomial *p);

/**
 * # Safety
 * `p` must be a live polynomial handle and `out` writable.
 */
enum CfStatus cf_polynomial_degree(const struct CfPolynomial *p, size_t *out);

/**
 * Coefficient `k` as a decimal string (zero past the degree).
 *
 * # Safety
 * `p` must be a live polynomial handle and `out` writable.
 */
enum CfStatus cf_polynomial_coeff(const struct CfPolynomial *p, size_t k, char **out);

/**
 * Coefficient `k` as `uint64_t`; `CF_STATUS_INVALID_ARGUMENT` if it does
 * not fit.
 *
 * # Safety
 * `p` must be a live polynomial handle and `out` writable.
 */
enum CfStatus cf_polynomial_coeff_u64(const struct CfPolynomial *p, size_t k, uint64_t *out);

/**
 * `{"family": .., "n": .., "coeffs": [decimal strings]}`.
 *
 * # Safety
 * `p` must be a live polynomial handle and `out` writable.
 */
enum CfStatus cf_polynomial_to_json(const struct CfPolynomial *p, char **out);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage for one pointer.
 */
enum CfStatus cf_graph_new(enum CfFamily family, size_t n, struct CfGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from [`cf_graph_new`], not yet freed.
 */
void cf_graph_free(struct CfGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t cf_graph_vertex_count(const struct CfGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t cf_graph_edge_count(const struct CfGraph *g);

/**
 * Label of vertex `v`.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum CfStatus cf_graph_label(const struct CfGraph *g, size_t v, char **out);

/**
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum CfStatus cf_graph_export(const struct CfGraph *g, enum CfExportFormat format, char **out);

/**
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum CfStatus cf_factor_solve(const struct CfGraph *g,
                              enum CfSolveMethod method,
                              struct CfFactor **out);

/**
 * Reads a factor of `g` from `[{"k": .., "vertices": [labels]}]` JSON.
 * The factor is not verified; see [`cf_factor_verify`].
 *
 * # Safety
 * `g` must be a live graph handle, `json` a NUL-terminated string and
 * `out` writable.
 */
enum CfStatus cf_factor_from_json(const struct CfGraph *g, const char *json, struct CfFactor **out);

/**
 * # Safety
 * `f` must be null or a factor handle, not yet freed.
 */
void cf_factor_free(struct CfFactor *f);

/**
 * Number of parts, or 0 for a null handle.
 *
 * # Safety
 * `f` must be null or a live factor handle.
 */
size_t cf_factor_part_count(const struct CfFactor *f);

/**
 * Writes part counts by dimension into `buf` (up to `len` entries) and the
 * full profile length into `out_len`. Pass `len = 0` to query the length.
 *
 * # Safety
 * `f` must be a live factor handle, `out_len` writable, and `buf` valid for
 * `len` writes when `len > 0`.
 */
enum CfStatus cf_factor_profile(const struct CfFactor *f,
                                uint64_t *buf,
                                size_t len,
                                size_t *out_len);

/**
 * Checks that `f` is a cube factor of `g`: `CF_STATUS_OK`, or
 * `CF_STATUS_INVALID_FACTOR` with the first violation as the message.
 *
 * # Safety
 * `g` and `f` must be live handles.
 */
enum CfStatus cf_factor_verify(const struct CfGraph *g, const struct CfFactor *f);

/**
 * # Safety
 * `g` and `f` must be live handles and `out` writable.
 */
enum CfStatus cf_factor_to_json(const struct CfGraph *g, const struct CfFactor *f, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBEFACTOR_H */
