/*
 * eagle - overlapping and hierarchical community detection for simple
 * undirected graphs: maximal-clique-seeded agglomerative clustering with an
 * overlap-aware extended modularity, plus greedy modularity and clique
 * percolation baselines.
 *
 * C API over opaque handles. Every fallible call returns an eagle_status;
 * on failure a thread-local message is available via eagle_last_error().
 * Handles are created by eagle_* constructors and released with the
 * matching *_free function. A handle derived from a graph keeps the graph
 * data alive internally, so freeing the graph first is safe.
 */

#ifndef EAGLE_EAGLE_H
#define EAGLE_EAGLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EAGLE_API __declspec(dllexport)
#elif defined(__GNUC__)
#define EAGLE_API __attribute__((visibility("default")))
#else
#define EAGLE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eagle_status {
  EAGLE_OK = 0,
  EAGLE_ERR_IO = 1,
  EAGLE_ERR_PARSE = 2,
  EAGLE_ERR_INVALID_ARGUMENT = 3,
  EAGLE_ERR_CONFLICT = 4,
  EAGLE_ERR_LIMIT = 5,
  EAGLE_ERR_INTERNAL = 6,
} eagle_status;

typedef enum eagle_symmetrize {
  EAGLE_SYMMETRIZE_SUM = 0,  /* reciprocal weights add up */
  EAGLE_SYMMETRIZE_MAX = 1,  /* keep the larger direction */
  EAGLE_SYMMETRIZE_NONE = 2, /* input must already be conflict-free */
} eagle_symmetrize;

typedef enum eagle_input_kind {
  EAGLE_INPUT_EDGELIST = 0, /* lines "u v [w]", '#' comments */
  EAGLE_INPUT_COAUTHOR = 1, /* one author list per line */
} eagle_input_kind;

typedef enum eagle_algorithm {
  EAGLE_ALGO_EAGLE = 0, /* clique-seeded agglomeration, EQ-optimal cut */
  EAGLE_ALGO_CNM = 1,   /* greedy modularity partitioning */
  EAGLE_ALGO_CPM = 2,   /* clique percolation cover */
} eagle_algorithm;

typedef enum eagle_format {
  EAGLE_FORMAT_JSON = 0,
  EAGLE_FORMAT_TEXT = 1,
} eagle_format;

typedef struct eagle_graph_s eagle_graph;
typedef struct eagle_cliques_s eagle_cliques;
typedef struct eagle_result_s eagle_result;
typedef struct eagle_hierarchy_s eagle_hierarchy;

/* ------------------------------------------------------------------ */
/* diagnostics                                                        */

EAGLE_API const char* eagle_version(void);
EAGLE_API const char* eagle_status_name(eagle_status status);

/* Message for the most recent failure on this thread; never NULL. */
EAGLE_API const char* eagle_last_error(void);

/* ------------------------------------------------------------------ */
/* graph construction and statistics                                  */

/* Parses and preprocesses `text` (length `len`, not NUL-dependent) into a
 * simple undirected graph: pairs are combined per `mode`, combined weights
 * strictly below `weight_threshold` are dropped, self-loops are removed and
 * vertices left without edges are omitted. */
EAGLE_API eagle_status eagle_graph_from_text(const char* text, size_t len,
                                             eagle_input_kind kind,
                                             eagle_symmetrize mode,
                                             double weight_threshold,
                                             eagle_graph** out);

EAGLE_API eagle_status eagle_graph_from_file(const char* path,
                                             eagle_input_kind kind,
                                             eagle_symmetrize mode,
                                             double weight_threshold,
                                             eagle_graph** out);

EAGLE_API void eagle_graph_free(eagle_graph* graph);

EAGLE_API uint32_t eagle_graph_vertex_count(const eagle_graph* graph);
EAGLE_API uint64_t eagle_graph_edge_count(const eagle_graph* graph);
EAGLE_API double eagle_graph_avg_degree(const eagle_graph* graph);
EAGLE_API double eagle_graph_avg_clustering(const eagle_graph* graph);

/* Label of a vertex; owned by the graph handle. NULL if out of range. */
EAGLE_API const char* eagle_graph_vertex_label(const eagle_graph* graph,
                                               uint32_t vertex);

/* {n, m, avg_degree, avg_clustering} record. Free with eagle_string_free. */
EAGLE_API eagle_status eagle_graph_summary(const eagle_graph* graph,
                                           eagle_format format, char** out);

/* ------------------------------------------------------------------ */
/* maximal cliques                                                    */

/* Enumerates all maximal cliques. `cap` bounds the clique count (0 means
 * the default of 10^7); exceeding it fails with EAGLE_ERR_LIMIT. */
EAGLE_API eagle_status eagle_graph_maximal_cliques(const eagle_graph* graph,
                                                   uint64_t cap,
                                                   eagle_cliques** out);

EAGLE_API void eagle_cliques_free(eagle_cliques* cliques);

EAGLE_API size_t eagle_cliques_count(const eagle_cliques* cliques);
EAGLE_API size_t eagle_cliques_size(const eagle_cliques* cliques, size_t index);

/* Copies the sorted member ids of clique `index` into `buffer` (capacity
 * `capacity` entries); `*written` receives the member count. Fails with
 * EAGLE_ERR_INVALID_ARGUMENT if the buffer is too small. */
EAGLE_API eagle_status eagle_cliques_members(const eagle_cliques* cliques,
                                             size_t index, uint32_t* buffer,
                                             size_t capacity, size_t* written);

/* 1 if every member of clique `index` also lies in some strictly larger
 * maximal clique, else 0. */
EAGLE_API int eagle_cliques_subordinate(const eagle_cliques* cliques,
                                        size_t index);

/* Clique listing restricted to size >= min_size (0 lists all), with a
 * summary (count, size histogram, subordinate vertices). */
EAGLE_API eagle_status eagle_cliques_report(const eagle_cliques* cliques,
                                            int min_size, eagle_format format,
                                            char** out);

/* ------------------------------------------------------------------ */
/* detection                                                          */

typedef struct eagle_options {
  int k;                  /* clique size threshold, default 4 */
  int max_depth;          /* hierarchy depth limit, default 3 */
  uint64_t clique_cap;    /* 0 = default 10^7 */
  uint32_t progress_every;/* stderr progress every N merges; 0 = off */
} eagle_options;

EAGLE_API void eagle_options_init(eagle_options* options);

/* Runs one detection pass. k is the seed threshold for EAGLE_ALGO_EAGLE
 * (>= 2) and the clique size for EAGLE_ALGO_CPM (>= 3); EAGLE_ALGO_CNM
 * ignores it. */
EAGLE_API eagle_status eagle_detect(const eagle_graph* graph,
                                    eagle_algorithm algorithm,
                                    const eagle_options* options,
                                    eagle_result** out);

EAGLE_API void eagle_result_free(eagle_result* result);

EAGLE_API size_t eagle_result_community_count(const eagle_result* result);
EAGLE_API size_t eagle_result_community_size(const eagle_result* result,
                                             size_t index);
EAGLE_API eagle_status eagle_result_community_members(const eagle_result* result,
                                                      size_t index,
                                                      uint32_t* buffer,
                                                      size_t capacity,
                                                      size_t* written);

/* Best EQ (eagle, cpm) or Q (cnm) of the returned cover/partition. */
EAGLE_API double eagle_result_score(const eagle_result* result);

/* Number of communities containing `vertex` (O_v); 0 if unclassified. */
EAGLE_API uint32_t eagle_result_membership(const eagle_result* result,
                                           uint32_t vertex);

/* EQ curve along the merge sequence (eagle only; empty otherwise). */
EAGLE_API size_t eagle_result_curve_length(const eagle_result* result);
EAGLE_API eagle_status eagle_result_curve_point(const eagle_result* result,
                                                size_t index,
                                                uint32_t* num_communities,
                                                double* eq);

/* Dendrogram accessors (eagle, cnm). Leaves carry ids 0..leaves-1; merge
 * step t creates node leaves+t-1. */
EAGLE_API size_t eagle_result_leaf_count(const eagle_result* result);
EAGLE_API size_t eagle_result_merge_count(const eagle_result* result);
EAGLE_API eagle_status eagle_result_merge(const eagle_result* result,
                                          size_t index, int32_t* left,
                                          int32_t* right, double* similarity);

EAGLE_API eagle_status eagle_result_report(const eagle_result* result,
                                           int include_dendrogram,
                                           eagle_format format, char** out);

/* ------------------------------------------------------------------ */
/* hierarchy                                                          */

/* Recursive detection. Nodes are indexed in preorder; node 0 is the root
 * covering the whole graph. */
EAGLE_API eagle_status eagle_detect_hierarchy(const eagle_graph* graph,
                                              const eagle_options* options,
                                              eagle_hierarchy** out);

EAGLE_API void eagle_hierarchy_free(eagle_hierarchy* hierarchy);

EAGLE_API size_t eagle_hierarchy_node_count(const eagle_hierarchy* hierarchy);
/* Parent preorder index, -1 for the root. */
EAGLE_API int32_t eagle_hierarchy_node_parent(const eagle_hierarchy* hierarchy,
                                              size_t node);
EAGLE_API size_t eagle_hierarchy_node_size(const eagle_hierarchy* hierarchy,
                                           size_t node);
EAGLE_API eagle_status eagle_hierarchy_node_members(
    const eagle_hierarchy* hierarchy, size_t node, uint32_t* buffer,
    size_t capacity, size_t* written);
/* 1 when the node was divided; its EQ is then eagle_hierarchy_node_eq. */
EAGLE_API int eagle_hierarchy_node_has_split(const eagle_hierarchy* hierarchy,
                                             size_t node);
EAGLE_API double eagle_hierarchy_node_eq(const eagle_hierarchy* hierarchy,
                                         size_t node);

EAGLE_API eagle_status eagle_hierarchy_report(const eagle_hierarchy* hierarchy,
                                              eagle_format format, char** out);

/* ------------------------------------------------------------------ */
/* memory                                                             */

/* Frees strings returned through char** out-parameters. */
EAGLE_API void eagle_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* EAGLE_EAGLE_H */
