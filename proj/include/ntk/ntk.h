/*
 * C interface of the ntk shared library.
 *
 * Objects are opaque handles created by ntk_*_load / parse / construction
 * calls and released with the matching ntk_*_destroy. Every fallible call
 * returns an ntk_status; on failure ntk_last_error() describes the problem
 * (per thread, valid until the next failing call on that thread).
 * Strings returned through char** out-parameters are heap allocated and must
 * be released with ntk_string_free. Structured results are JSON documents
 * in the same formats the ntk command-line tool prints.
 */
#ifndef NTK_NTK_H
#define NTK_NTK_H

#include <stddef.h>
#include <stdint.h>

#if defined(NTK_BUILDING_LIBRARY)
#define NTK_API __attribute__((visibility("default")))
#else
#define NTK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef uint64_t ntk_vertex;

typedef struct ntk_graph ntk_graph;
typedef struct ntk_tree ntk_tree;
typedef struct ntk_trace ntk_trace;

typedef enum ntk_status {
  NTK_OK = 0,
  NTK_ERR_INVALID_ARGUMENT = 1,
  NTK_ERR_CONTRACT = 2,
  NTK_ERR_DISCONNECTED = 3,
  NTK_ERR_INSEPARABLE = 4,
  NTK_ERR_PARSE = 5,
  NTK_ERR_IO = 6,
  NTK_ERR_GENERATOR = 7,
  NTK_ERR_INTERNAL = 8
} ntk_status;

/* Sentinel for "no limit" in ntk_run_options. */
#define NTK_UNLIMITED ((size_t)-1)

typedef struct ntk_run_options {
  size_t step_budget; /* NTK_UNLIMITED for no budget */
  size_t kappa_small; /* NTK_UNLIMITED to fix path families for every pair */
} ntk_run_options;

NTK_API const char* ntk_status_name(ntk_status status);
NTK_API const char* ntk_last_error(void);
NTK_API void ntk_string_free(char* s);

/* Graphs */
NTK_API ntk_status ntk_graph_load(const char* path, ntk_graph** out);
NTK_API ntk_status ntk_graph_parse_json(const char* text, ntk_graph** out);
NTK_API ntk_status ntk_graph_parse_edge_list(const char* text, ntk_graph** out);
/* edge_ends holds 2 * edge_count ids: u0 v0 u1 v1 ... */
NTK_API ntk_status ntk_graph_from_edges(const ntk_vertex* vertices, size_t vertex_count,
                                        const ntk_vertex* edge_ends, size_t edge_count,
                                        ntk_graph** out);
/* Radius truncation of a built-in generator; n and m only apply to fat-tk-gen. */
NTK_API ntk_status ntk_graph_generate(const char* name, size_t n, size_t m, size_t radius,
                                      ntk_graph** out);
NTK_API ntk_status ntk_graph_random(size_t vertex_count, double density, uint64_t seed,
                                    ntk_graph** out);
NTK_API void ntk_graph_destroy(ntk_graph* g);
NTK_API size_t ntk_graph_vertex_count(const ntk_graph* g);
NTK_API size_t ntk_graph_edge_count(const ntk_graph* g);
/* Copies up to capacity ascending vertex ids into out; returns the vertex count. */
NTK_API size_t ntk_graph_vertices(const ntk_graph* g, ntk_vertex* out, size_t capacity);
NTK_API ntk_status ntk_graph_to_json(const ntk_graph* g, char** out);
NTK_API ntk_status ntk_graph_to_dot(const ntk_graph* g, char** out);
NTK_API ntk_status ntk_generators_json(char** out);

/* Trees */
NTK_API ntk_status ntk_tree_load(const char* path, ntk_tree** out);
NTK_API ntk_status ntk_tree_parse_json(const char* text, ntk_tree** out);
NTK_API void ntk_tree_destroy(ntk_tree* t);
NTK_API size_t ntk_tree_size(const ntk_tree* t);
NTK_API ntk_status ntk_tree_to_json(const ntk_tree* t, char** out);
NTK_API ntk_status ntk_tree_to_dot(const ntk_graph* g, const ntk_tree* t, char** out);
NTK_API ntk_status ntk_tree_levels_json(const ntk_tree* t, char** out);
/* *normal is set to 1 or 0; report_json (optional) receives the report. */
NTK_API ntk_status ntk_check_normal(const ntk_graph* g, const ntk_tree* t, int* normal,
                                    char** report_json);

/* Constructions. options may be NULL (no limits). */
NTK_API ntk_status ntk_dfs_nst(const ntk_graph* g, ntk_vertex root, ntk_tree** out);
NTK_API ntk_status ntk_omega(const ntk_graph* g, ntk_vertex root, const ntk_run_options* options,
                             ntk_trace** out);
NTK_API ntk_status ntk_local(const ntk_graph* g, const ntk_vertex* targets, size_t target_count,
                             ntk_vertex root, const ntk_run_options* options, ntk_trace** out);
/* The cover is given flattened: set k holds set_sizes[k] consecutive ids. */
NTK_API ntk_status ntk_cover_nst(const ntk_graph* g, const ntk_vertex* ids,
                                 const size_t* set_sizes, size_t set_count, ntk_vertex root,
                                 const ntk_run_options* options, ntk_trace** out);
NTK_API void ntk_trace_destroy(ntk_trace* trace);
NTK_API const char* ntk_trace_status(const ntk_trace* trace);
NTK_API size_t ntk_trace_rounds(const ntk_trace* trace);
NTK_API ntk_status ntk_trace_to_json(const ntk_trace* trace, char** out);
NTK_API ntk_status ntk_trace_final_tree(const ntk_trace* trace, ntk_tree** out);

/* Connectivity */
NTK_API ntk_status ntk_kappa(const ntk_graph* g, ntk_vertex v, ntk_vertex w, size_t* out);
NTK_API ntk_status ntk_kappa_json(const ntk_graph* g, ntk_vertex v, ntk_vertex w, char** out);
NTK_API ntk_status ntk_separator_json(const ntk_graph* g, const ntk_vertex* a, size_t a_count,
                                      const ntk_vertex* b, size_t b_count, char** out);

/* Fat TK certificates */
NTK_API ntk_status ntk_fat_tk_find(const ntk_graph* g, const ntk_vertex* branch,
                                   size_t branch_count, size_t m, int* found, char** out);
NTK_API ntk_status ntk_fat_tk_verify(const ntk_graph* g, const char* certificate_json, int* valid,
                                     char** out);
NTK_API ntk_status ntk_kappa_necessary(const ntk_graph* g, const ntk_vertex* branch,
                                       size_t branch_count, size_t m, int* holds);
NTK_API ntk_status ntk_dispersed(const ntk_graph* g, const ntk_vertex* probe, size_t probe_count,
                                 size_t n, size_t m, size_t s, size_t search_budget,
                                 int* dispersed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* NTK_NTK_H */
