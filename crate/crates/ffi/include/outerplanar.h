#ifndef OUTERPLANAR_H
#define OUTERPLANAR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every function.
 */
typedef enum OpStatus {
  OP_STATUS_OK = 0,
  OP_STATUS_NULL_POINTER = 1,
  OP_STATUS_INVALID_ARGUMENT = 2,
  OP_STATUS_SIZE_GUARD = 3,
  OP_STATUS_OVERFLOW = 4,
  OP_STATUS_UTF8 = 5,
  OP_STATUS_PANIC = 6,
} OpStatus;

/**
 * Opaque handle to a computed decomposition.
 */
typedef struct OpDecomposition OpDecomposition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread; empty after a success.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *op_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void op_string_free(char *s);

/**
 * Catalan number c_n as a `u64`; fails with `Overflow` when it does not fit.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum OpStatus op_catalan(uint64_t n, uint64_t *out);

/**
 * Multiplicity of rho_k in the tensor product, as a decimal string.
 *
 * # Safety
 * `degrees` must point to `len` values; `out` must be valid for writes.
 */
enum OpStatus op_multiplicity(const uint32_t *degrees, size_t len, uint64_t k, char **out);

/**
 * Number of noncrossing graphs with the given degrees, as a decimal string.
 * With `rooted`, the first degree belongs to the root vertex.
 *
 * # Safety
 * `degrees` must point to `len` values; `out` must be valid for writes.
 */
enum OpStatus op_count_graphs(const uint32_t *degrees, size_t len, bool rooted, char **out);

/**
 * Tensor JSON of t_G, or t_{G,i} when `rooted`. `arcs` holds `arc_count` triples
 * (from, to, multiplicity) of vertex labels; the root is label 0.
 *
 * # Safety
 * `arcs` must point to `3 * arc_count` values; `out` must be valid for writes.
 */
enum OpStatus op_graph_tensor_json(size_t vertices,
                                   const uint32_t *arcs,
                                   size_t arc_count,
                                   bool rooted,
                                   uint32_t i,
                                   char **out);

/**
 * Decomposes and verifies the tensor product with the given degrees.
 *
 * # Safety
 * `degrees` must point to `len` values; `out` must be valid for writes.
 */
enum OpStatus op_decompose(const uint32_t *degrees, size_t len, struct OpDecomposition **out);

/**
 * Parses a report previously produced by [`op_decomposition_to_json`].
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum OpStatus op_decomposition_from_json(const char *json, struct OpDecomposition **out);

/**
 * Releases a decomposition handle. Null is ignored.
 *
 * # Safety
 * `h` must come from this library and not have been freed.
 */
void op_decomposition_free(struct OpDecomposition *h);

/**
 * Number of isotypic components.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
enum OpStatus op_decomposition_component_count(const struct OpDecomposition *h, size_t *out);

/**
 * Highest weight d0 and multiplicity of component `index` (largest d0 first).
 *
 * # Safety
 * `h` must be a live handle; `d0` and `multiplicity` must be valid for writes.
 */
enum OpStatus op_decomposition_component(const struct OpDecomposition *h,
                                         size_t index,
                                         uint32_t *d0,
                                         size_t *multiplicity);

/**
 * Whether every verification flag passed; false when the report was not verified.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
enum OpStatus op_decomposition_verified(const struct OpDecomposition *h, bool *out);

/**
 * One-line summary such as `ρ2 ⊕ ρ0, dim 4 = 4`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
enum OpStatus op_decomposition_summary(const struct OpDecomposition *h, char **out);

/**
 * Canonical JSON form of the report.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
enum OpStatus op_decomposition_to_json(const struct OpDecomposition *h, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OUTERPLANAR_H */
