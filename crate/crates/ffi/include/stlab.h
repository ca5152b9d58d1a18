#ifndef STLAB_H
#define STLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum StlabStatus {
  StlabStatus_Ok = 0,
  StlabStatus_NullArgument = 1,
  StlabStatus_InvalidArgument = 2,
  StlabStatus_ParseError = 3,
  StlabStatus_TooLarge = 4,
  StlabStatus_BufferTooSmall = 5,
} StlabStatus;

/**
 * Opaque graph handle. Created by the constructors below and released with
 * `stlab_graph_free`.
 */
typedef struct StlabGraph StlabGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an edgeless graph of the given order (at most 64).
 */
enum StlabStatus stlab_graph_new(uintptr_t order, struct StlabGraph **out);

/**
 * Releases a graph handle. Null is ignored.
 */
void stlab_graph_free(struct StlabGraph *g);

/**
 * Adds an undirected edge; loops and out-of-range vertices are rejected.
 */
enum StlabStatus stlab_graph_add_edge(struct StlabGraph *g, uintptr_t u, uintptr_t v);

/**
 * Parses a short-form graph6 string.
 */
enum StlabStatus stlab_graph_from_g6(const char *text, struct StlabGraph **out);

/**
 * Writes the graph6 encoding into `buf` (NUL terminated).
 */
enum StlabStatus stlab_graph_to_g6(const struct StlabGraph *g, char *buf, uintptr_t buf_len);

int stlab_graph_order(const struct StlabGraph *g);

int64_t stlab_graph_edge_count(const struct StlabGraph *g);

int stlab_graph_degree(const struct StlabGraph *g, uintptr_t v);

int stlab_graph_has_edge(const struct StlabGraph *g, uintptr_t u, uintptr_t v);

/**
 * True (1) iff every induced subgraph of order `s` has at least `t` edges.
 */
enum StlabStatus stlab_is_st_graph(const struct StlabGraph *g, uintptr_t s, uint64_t t, int *out);

int stlab_independence_number(const struct StlabGraph *g);

int stlab_vertex_connectivity(const struct StlabGraph *g);

int stlab_is_triangle_free(const struct StlabGraph *g);

int stlab_is_hamiltonian(const struct StlabGraph *g);

int stlab_is_pancyclic(const struct StlabGraph *g);

/**
 * Writes the canonical graph6 form (order at most 16) into `buf`.
 */
enum StlabStatus stlab_canonical_g6(const struct StlabGraph *g, char *buf, uintptr_t buf_len);

/**
 * 1 if isomorphic, 0 if not, -1 on error (orders above 16).
 */
int stlab_are_isomorphic(const struct StlabGraph *a, const struct StlabGraph *b);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* STLAB_H */
