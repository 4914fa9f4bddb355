#ifndef MINORCAT_H
#define MINORCAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MinorcatStatus {
  MINORCAT_STATUS_OK = 0,
  MINORCAT_STATUS_NULL_POINTER = 1,
  MINORCAT_STATUS_INVALID_UTF8 = 2,
  MINORCAT_STATUS_PARSE = 3,
  MINORCAT_STATUS_INVALID_INPUT = 4,
  MINORCAT_STATUS_RESOURCE_LIMIT = 5,
  MINORCAT_STATUS_OVERFLOW = 6,
  MINORCAT_STATUS_PANIC = 7,
} MinorcatStatus;

typedef struct MinorcatGraph MinorcatGraph;

typedef struct MinorcatHomology MinorcatHomology;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next failing call on the same thread.
const char *minorcat_last_error_message(void);

// Library version as a static string.
const char *minorcat_version(void);

// Parses the line-based graph format.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum MinorcatStatus minorcat_graph_parse(const char *text, struct MinorcatGraph **out);

// Builds a named graph such as `K5`, `K3,3`, `C4`, `R2` or `*`.
//
// # Safety
// `name` must be a nul-terminated string; `out` must be writable.
enum MinorcatStatus minorcat_graph_from_name(const char *name, struct MinorcatGraph **out);

// # Safety
// `g` must come from this library and not have been freed; null is ignored.
void minorcat_graph_free(struct MinorcatGraph *g);

// # Safety
// `g` must be a live graph handle; out-pointers must be writable.
enum MinorcatStatus minorcat_graph_counts(const struct MinorcatGraph *g,
                                          size_t *vertices,
                                          size_t *edges);

// First Betti number of a nonempty connected graph.
//
// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum MinorcatStatus minorcat_graph_genus(const struct MinorcatGraph *g, size_t *out);

// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum MinorcatStatus minorcat_graph_is_connected(const struct MinorcatGraph *g, bool *out);

// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum MinorcatStatus minorcat_graph_is_planar(const struct MinorcatGraph *g, bool *out);

// # Safety
// `a` and `b` must be live graph handles; `out` must be writable.
enum MinorcatStatus minorcat_graph_is_isomorphic(const struct MinorcatGraph *a,
                                                 const struct MinorcatGraph *b,
                                                 bool *out);

// Number of minor morphisms `g -> h`.
//
// # Safety
// `g` and `h` must be live graph handles; `out` must be writable.
enum MinorcatStatus minorcat_hom_count(const struct MinorcatGraph *g,
                                       const struct MinorcatGraph *h,
                                       size_t *out);

// Whether `h` is a minor of `g`.
//
// # Safety
// `g` and `h` must be live graph handles; `out` must be writable.
enum MinorcatStatus minorcat_has_minor(const struct MinorcatGraph *g,
                                       const struct MinorcatGraph *h,
                                       bool *out);

// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum MinorcatStatus minorcat_automorphism_count(const struct MinorcatGraph *g, size_t *out);

// `H_i(U_n(G); Z)` from the reduced Świątkowski complex. For the
// single-vertex graph in degree 0 this differs from the configuration
// space at `n = 1`.
//
// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum MinorcatStatus minorcat_swiatkowski_homology(const struct MinorcatGraph *g,
                                                  size_t i,
                                                  size_t n,
                                                  struct MinorcatHomology **out);

// `H_i(U_n(G); Z)` from the discretized cube complex.
//
// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum MinorcatStatus minorcat_abrams_homology(const struct MinorcatGraph *g,
                                             size_t i,
                                             size_t n,
                                             struct MinorcatHomology **out);

// # Safety
// `h` must come from this library and not have been freed; null is ignored.
void minorcat_homology_free(struct MinorcatHomology *h);

// # Safety
// `h` must be a live homology handle; `out` must be writable.
enum MinorcatStatus minorcat_homology_rank(const struct MinorcatHomology *h, size_t *out);

// Number of torsion divisors.
//
// # Safety
// `h` must be a live homology handle; `out` must be writable.
enum MinorcatStatus minorcat_homology_torsion_len(const struct MinorcatHomology *h, size_t *out);

// The `k`-th torsion divisor; `Overflow` if it does not fit in 64 bits.
//
// # Safety
// `h` must be a live homology handle; `out` must be writable.
enum MinorcatStatus minorcat_homology_torsion(const struct MinorcatHomology *h,
                                              size_t k,
                                              uint64_t *out);

// Text form such as `Z^2 + Z/2`; release with [`minorcat_string_free`].
//
// # Safety
// `h` must be a live homology handle; `out` must be writable.
enum MinorcatStatus minorcat_homology_to_string(const struct MinorcatHomology *h, char **out);

// # Safety
// `s` must come from this library and not have been freed; null is ignored.
void minorcat_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MINORCAT_H */
