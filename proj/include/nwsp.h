/* C interface to the shortest-path library: opaque handles, integer error
 * codes, thread-local error messages. Weights are signed 64-bit with
 * |w| <= 2^40; vertices are 0-based. All run functions are deterministic
 * for a fixed (graph, seed, profile). */
#ifndef NWSP_H
#define NWSP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nwsp_graph nwsp_graph;
typedef struct nwsp_result nwsp_result;

enum nwsp_status {
  NWSP_OK = 0,
  NWSP_EINVAL = 1,       /* malformed input */
  NWSP_EOVERFLOW = 2,    /* 128-bit arithmetic overflow */
  NWSP_ENEGWEIGHT = 3,   /* operation requires nonnegative weights */
  NWSP_ENOCYCLE = 4,     /* graph contains no cycle */
  NWSP_ECAP = 5,         /* retry/alternation cap exceeded */
  NWSP_EINTERNAL = 6
};

/* Distance kinds reported by nwsp_result_distance. */
enum nwsp_dist_kind { NWSP_DIST_FINITE = 0, NWSP_DIST_POS_INF = 1, NWSP_DIST_NEG_INF = 2 };

/* Result kinds. */
enum nwsp_result_kind {
  NWSP_RESULT_TREE = 0,
  NWSP_RESULT_CYCLE = 1,
  NWSP_RESULT_DISTANCES = 2,
  NWSP_RESULT_MCM = 3,
  NWSP_RESULT_LDD = 4
};

/* Message for the most recent failing call on this thread. */
const char* nwsp_last_error(void);

/* Graph lifecycle. */
int nwsp_graph_create(int64_t n, int64_t m, const int64_t* src, const int64_t* dst,
                      const int64_t* weight, nwsp_graph** out);
void nwsp_graph_destroy(nwsp_graph* g);
int64_t nwsp_graph_vertices(const nwsp_graph* g);
int64_t nwsp_graph_edges(const nwsp_graph* g);
int nwsp_graph_edge(const nwsp_graph* g, int64_t e, int64_t* src, int64_t* dst, int64_t* weight);

/* Deterministic generators; kind is one of
 * "random" | "restricted" | "negcycle" | "bellman-bad" | "grid". */
int nwsp_generate(const char* kind, int64_t n, int64_t m, int64_t w_min, int64_t w_max,
                  uint64_t seed, nwsp_graph** out);

/* Solvers. profile: NULL or "default" or "bench". */
int nwsp_sssp(const nwsp_graph* g, int64_t source, uint64_t seed, const char* profile,
              nwsp_result** out);
int nwsp_distances(const nwsp_graph* g, int64_t source, uint64_t seed, const char* profile,
                   nwsp_result** out);
int nwsp_min_cycle_mean(const nwsp_graph* g, uint64_t seed, const char* profile,
                        nwsp_result** out);
int nwsp_strong_ldd(const nwsp_graph* g, int64_t diameter_bound, uint64_t seed,
                    const char* profile, nwsp_result** out);

/* Result accessors. Getters return NWSP_EINVAL when the result kind does not
 * match. */
void nwsp_result_destroy(nwsp_result* r);
int nwsp_result_kind(const nwsp_result* r);
uint64_t nwsp_result_steps(const nwsp_result* r);
/* Step counts split between the tree-solving and cycle-finding phases
 * (both zero for results that do not run the alternating solver). */
uint64_t nwsp_result_steps_tree_phase(const nwsp_result* r);
uint64_t nwsp_result_steps_cycle_phase(const nwsp_result* r);
int nwsp_result_verified(const nwsp_result* r); /* 1 if re-verified against the graph */

/* Tree / distances: per-vertex value and kind; parent edge is -1 for the
 * source, unreachable vertices, and non-tree results. */
int nwsp_result_distance(const nwsp_result* r, int64_t v, int64_t* value, int* kind);
int nwsp_result_parent_edge(const nwsp_result* r, int64_t v, int64_t* edge);

/* Cycle (also the witness cycle of an MCM result): edge id list. */
int nwsp_result_cycle_len(const nwsp_result* r, int64_t* len);
int nwsp_result_cycle_edge(const nwsp_result* r, int64_t i, int64_t* edge);

/* Minimum cycle mean as an exact fraction. */
int nwsp_result_mean(const nwsp_result* r, int64_t* numerator, int64_t* denominator);

/* LDD: cut edge ids (sorted) and per-component certified diameters. */
int nwsp_result_cut_size(const nwsp_result* r, int64_t* size);
int nwsp_result_cut_edge(const nwsp_result* r, int64_t i, int64_t* edge);
int nwsp_result_component_count(const nwsp_result* r, int64_t* count);
int nwsp_result_component_diameter(const nwsp_result* r, int64_t i, int64_t* diameter);

/* Standalone verifiers for stored outputs (used by `verify`). kinds/values
 * are per-vertex arrays of length n; parent[v] = -1 for "none". */
int nwsp_verify_tree(const nwsp_graph* g, int64_t source, const int64_t* dist_value,
                     const int* dist_kind, const int64_t* parent, int* ok);
int nwsp_verify_cycle(const nwsp_graph* g, const int64_t* edges, int64_t len, int* ok);
int nwsp_verify_distances(const nwsp_graph* g, int64_t source, const int64_t* dist_value,
                          const int* dist_kind, int* ok);
int nwsp_verify_ldd(const nwsp_graph* g, const int64_t* cut_edges, int64_t len,
                    int64_t diameter_bound, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* NWSP_H */
