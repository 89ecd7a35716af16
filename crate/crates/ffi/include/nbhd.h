#ifndef NBHD_H
#define NBHD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NbhdStatus {
  NBHD_STATUS_OK = 0,
  NBHD_STATUS_NULL_POINTER = 1,
  NBHD_STATUS_PARAMETER = 2,
  NBHD_STATUS_PARSE = 3,
  NBHD_STATUS_IO = 4,
  NBHD_STATUS_BUDGET = 5,
  NBHD_STATUS_MISSING_DIMENSION = 6,
  NBHD_STATUS_CERTIFICATE = 7,
  NBHD_STATUS_PRECONDITION = 8,
  NBHD_STATUS_VERIFICATION = 9,
  NBHD_STATUS_INVALID_UTF8 = 10,
  NBHD_STATUS_PANIC = 11,
} NbhdStatus;

/**
 * Opaque simplicial complex handle.
 */
typedef struct NbhdComplex NbhdComplex;

/**
 * Opaque graph handle.
 */
typedef struct NbhdGraph NbhdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum NbhdStatus nbhd_graph_new(size_t n,
                               const size_t *edges,
                               size_t edge_count,
                               struct NbhdGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum NbhdStatus nbhd_graph_complete(size_t p, struct NbhdGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum NbhdStatus nbhd_graph_complete_bipartite(size_t l, size_t m, struct NbhdGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum NbhdStatus nbhd_graph_cycle(size_t n, struct NbhdGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum NbhdStatus nbhd_graph_kneser(size_t n, size_t k, struct NbhdGraph **out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum NbhdStatus nbhd_graph_mycielskian(const struct NbhdGraph *g, struct NbhdGraph **out);

/**
 * Triangle-free graph with chromatic number `q`.
 *
 * # Safety
 * `out` must be writable.
 */
enum NbhdStatus nbhd_graph_triangle_free(size_t q, struct NbhdGraph **out);

/**
 * Joins `h` and `k` by a path of length two from `x` in `h` to `y` in `k`.
 *
 * # Safety
 * `h` and `k` must be live graph handles; `out` must be writable.
 */
enum NbhdStatus nbhd_graph_gadget(const struct NbhdGraph *h,
                                  size_t x,
                                  const struct NbhdGraph *k,
                                  size_t y,
                                  struct NbhdGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum NbhdStatus nbhd_graph_corollary(size_t l,
                                     size_t m,
                                     size_t p,
                                     size_t q,
                                     struct NbhdGraph **out);

/**
 * Parses DIMACS text.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum NbhdStatus nbhd_graph_from_dimacs(const char *text, struct NbhdGraph **out);

/**
 * Canonical DIMACS text; free with [`nbhd_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum NbhdStatus nbhd_graph_to_dimacs(const struct NbhdGraph *g, char **out);

/**
 * # Safety
 * `g` must be null or a handle not yet freed.
 */
void nbhd_graph_free(struct NbhdGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t nbhd_graph_vertex_count(const struct NbhdGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t nbhd_graph_edge_count(const struct NbhdGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum NbhdStatus nbhd_graph_is_connected(const struct NbhdGraph *g, bool *out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum NbhdStatus nbhd_graph_is_bipartite(const struct NbhdGraph *g, bool *out);

/**
 * Exact chromatic number. When `coloring` is non-null it receives one color
 * per vertex.
 *
 * # Safety
 * `g` must be a live graph handle; `chi` must be writable; `coloring` must be
 * null or hold `nbhd_graph_vertex_count(g)` writable entries.
 */
enum NbhdStatus nbhd_graph_chromatic_number(const struct NbhdGraph *g,
                                            size_t *chi,
                                            size_t *coloring);

/**
 * Exact clique number. When `clique` is non-null it receives the sorted
 * clique vertices (at most `nbhd_graph_vertex_count(g)` entries).
 *
 * # Safety
 * `g` must be a live graph handle; `omega` must be writable; `clique` must be
 * null or hold `nbhd_graph_vertex_count(g)` writable entries.
 */
enum NbhdStatus nbhd_graph_clique_number(const struct NbhdGraph *g, size_t *omega, size_t *clique);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum NbhdStatus nbhd_complex_from_graph(const struct NbhdGraph *g, struct NbhdComplex **out);

/**
 * Builds a complex from `facet_count` faces stored back to back in
 * `vertices`, with `lengths[i]` vertices in face `i`.
 *
 * # Safety
 * `lengths` must hold `facet_count` entries and `vertices` their sum;
 * `out` must be writable.
 */
enum NbhdStatus nbhd_complex_from_faces(size_t num_vertices,
                                        const size_t *vertices,
                                        const size_t *lengths,
                                        size_t facet_count,
                                        struct NbhdComplex **out);

/**
 * # Safety
 * `c` must be null or a handle not yet freed.
 */
void nbhd_complex_free(struct NbhdComplex *c);

/**
 * Number of facets, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live complex handle.
 */
size_t nbhd_complex_facet_count(const struct NbhdComplex *c);

/**
 * Reduced homology in degrees `0..=max_dim`. `betti` receives
 * `max_dim + 1` Betti numbers; when `json` is non-null it receives the full
 * groups, torsion included, as a JSON array.
 *
 * # Safety
 * `c` must be a live complex handle; `betti` must hold `max_dim + 1`
 * writable entries; `json` must be null or writable.
 */
enum NbhdStatus nbhd_complex_homology(const struct NbhdComplex *c,
                                      size_t max_dim,
                                      size_t face_limit,
                                      size_t *betti,
                                      char **json);

/**
 * Sets `certified` when the complex is nonempty, connected and has
 * nontrivial first homology.
 *
 * # Safety
 * `c` must be a live complex handle; `certified` must be writable.
 */
enum NbhdStatus nbhd_complex_certify_conn_zero(const struct NbhdComplex *c,
                                               size_t face_limit,
                                               bool *certified);

/**
 * Runs the separation check and returns its JSON report.
 *
 * # Safety
 * `pass` and `json` must be writable.
 */
enum NbhdStatus nbhd_verify_corollary(size_t l,
                                      size_t m,
                                      size_t p,
                                      size_t q,
                                      bool *pass,
                                      char **json);

/**
 * Runs the wedge-homology check on the gadget of `h` at `x` and `k` at `y`
 * through degree `max_dim` and returns its JSON report.
 *
 * # Safety
 * `h` and `k` must be live graph handles; `pass` and `json` must be writable.
 */
enum NbhdStatus nbhd_verify_theorem2(const struct NbhdGraph *h,
                                     size_t x,
                                     const struct NbhdGraph *k,
                                     size_t y,
                                     size_t max_dim,
                                     bool *pass,
                                     char **json);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void nbhd_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *nbhd_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NBHD_H */
