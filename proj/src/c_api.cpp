#include "ntk/ntk.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "ntk/connectivity.hpp"
#include "ntk/fat_tk.hpp"
#include "ntk/generator.hpp"
#include "ntk/io.hpp"
#include "ntk/nst.hpp"

struct ntk_graph {
  ntk::Graph graph;
  std::optional<ntk::GraphGenerator> generator;  // set for truncations, used for labels
};

struct ntk_tree {
  ntk::RootedTree tree;
};

struct ntk_trace {
  ntk::RunTrace trace;
};

namespace {

thread_local std::string last_error;

ntk_status code_of(ntk::Errc code) {
  switch (code) {
    case ntk::Errc::invalid_argument: return NTK_ERR_INVALID_ARGUMENT;
    case ntk::Errc::contract_violation: return NTK_ERR_CONTRACT;
    case ntk::Errc::disconnected: return NTK_ERR_DISCONNECTED;
    case ntk::Errc::inseparable: return NTK_ERR_INSEPARABLE;
    case ntk::Errc::parse_error: return NTK_ERR_PARSE;
    case ntk::Errc::io_error: return NTK_ERR_IO;
    case ntk::Errc::generator_failure: return NTK_ERR_GENERATOR;
  }
  return NTK_ERR_INTERNAL;
}

ntk_status fail(ntk_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
ntk_status guarded(Body&& body) {
  try {
    body();
    return NTK_OK;
  } catch (const ntk::Error& e) {
    return fail(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NTK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NTK_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) throw ntk::Error(ntk::Errc::invalid_argument, std::string(what) + " is NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  if (out) *out = copy_string(s);
}

ntk::VertexSet to_set(const ntk_vertex* ids, std::size_t count) {
  if (count > 0) require(ids, "vertex array");
  return ntk::VertexSet(ids, ids + count);
}

ntk::RunOptions to_options(const ntk_run_options* options) {
  ntk::RunOptions out;
  if (options) {
    if (options->step_budget != NTK_UNLIMITED) out.step_budget = options->step_budget;
    if (options->kappa_small != NTK_UNLIMITED) out.kappa_small = options->kappa_small;
  }
  return out;
}

ntk::io::VertexLabel labels_of(const ntk_graph* g) {
  if (!g->generator) return {};
  return [gen = &*g->generator](ntk::VertexId v) { return gen->label(v); };
}

ntk_status make_graph(ntk_graph** out, auto&& build) {
  return guarded([&] {
    require(out, "out");
    *out = new ntk_graph{build(), std::nullopt};
  });
}

}  // namespace

extern "C" {

const char* ntk_status_name(ntk_status status) {
  switch (status) {
    case NTK_OK: return "ok";
    case NTK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NTK_ERR_CONTRACT: return "contract violation";
    case NTK_ERR_DISCONNECTED: return "disconnected graph";
    case NTK_ERR_INSEPARABLE: return "inseparable";
    case NTK_ERR_PARSE: return "parse error";
    case NTK_ERR_IO: return "i/o error";
    case NTK_ERR_GENERATOR: return "generator failure";
    case NTK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ntk_last_error(void) { return last_error.c_str(); }

void ntk_string_free(char* s) { std::free(s); }

ntk_status ntk_graph_load(const char* path, ntk_graph** out) {
  return make_graph(out, [&] {
    require(path, "path");
    return ntk::io::load_graph(path);
  });
}

ntk_status ntk_graph_parse_json(const char* text, ntk_graph** out) {
  return make_graph(out, [&] {
    require(text, "text");
    return ntk::io::read_graph_json(text);
  });
}

ntk_status ntk_graph_parse_edge_list(const char* text, ntk_graph** out) {
  return make_graph(out, [&] {
    require(text, "text");
    return ntk::io::read_edge_list(text);
  });
}

ntk_status ntk_graph_from_edges(const ntk_vertex* vertices, size_t vertex_count,
                                const ntk_vertex* edge_ends, size_t edge_count, ntk_graph** out) {
  return make_graph(out, [&] {
    if (vertex_count > 0) require(vertices, "vertices");
    if (edge_count > 0) require(edge_ends, "edge_ends");
    std::vector<ntk::Edge> edges;
    for (std::size_t k = 0; k < edge_count; ++k)
      edges.push_back({edge_ends[2 * k], edge_ends[2 * k + 1]});
    return ntk::Graph(std::vector<ntk::VertexId>(vertices, vertices + vertex_count), edges);
  });
}

ntk_status ntk_graph_generate(const char* name, size_t n, size_t m, size_t radius,
                              ntk_graph** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    ntk::GraphGenerator gen = ntk::make_generator(name, {n, m});
    ntk::Graph g = gen.truncate(radius);
    *out = new ntk_graph{std::move(g), std::move(gen)};
  });
}

ntk_status ntk_graph_random(size_t vertex_count, double density, uint64_t seed, ntk_graph** out) {
  return make_graph(out, [&] { return ntk::random_connected_graph(vertex_count, density, seed); });
}

void ntk_graph_destroy(ntk_graph* g) { delete g; }

size_t ntk_graph_vertex_count(const ntk_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t ntk_graph_edge_count(const ntk_graph* g) { return g ? g->graph.edge_count() : 0; }

size_t ntk_graph_vertices(const ntk_graph* g, ntk_vertex* out, size_t capacity) {
  if (!g) return 0;
  const auto& ids = g->graph.vertices();
  for (std::size_t i = 0; out && i < ids.size() && i < capacity; ++i) out[i] = ids[i];
  return ids.size();
}

ntk_status ntk_graph_to_json(const ntk_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    emit(out, ntk::io::write_graph_json(g->graph));
  });
}

ntk_status ntk_graph_to_dot(const ntk_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    emit(out, ntk::io::graph_to_dot(g->graph, labels_of(g)));
  });
}

ntk_status ntk_generators_json(char** out) {
  return guarded([&] {
    emit(out, ntk::io::generators_to_json());
  });
}

ntk_status ntk_tree_load(const char* path, ntk_tree** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new ntk_tree{ntk::io::read_tree_json(ntk::io::read_file(path))};
  });
}

ntk_status ntk_tree_parse_json(const char* text, ntk_tree** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new ntk_tree{ntk::io::read_tree_json(text)};
  });
}

void ntk_tree_destroy(ntk_tree* t) { delete t; }

size_t ntk_tree_size(const ntk_tree* t) { return t ? t->tree.size() : 0; }

ntk_status ntk_tree_to_json(const ntk_tree* t, char** out) {
  return guarded([&] {
    require(t, "tree");
    emit(out, ntk::io::write_tree_json(t->tree));
  });
}

ntk_status ntk_tree_to_dot(const ntk_graph* g, const ntk_tree* t, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(t, "tree");
    emit(out, ntk::io::tree_to_dot(g->graph, t->tree, labels_of(g)));
  });
}

ntk_status ntk_tree_levels_json(const ntk_tree* t, char** out) {
  return guarded([&] {
    require(t, "tree");
    emit(out, ntk::io::levels_to_json(ntk::levels_of(t->tree)));
  });
}

ntk_status ntk_check_normal(const ntk_graph* g, const ntk_tree* t, int* normal,
                            char** report_json) {
  return guarded([&] {
    require(g, "graph");
    require(t, "tree");
    ntk::NormalityReport report = ntk::is_normal(g->graph, t->tree);
    if (normal) *normal = report.normal ? 1 : 0;
    emit(report_json, ntk::io::report_to_json(report));
  });
}

ntk_status ntk_dfs_nst(const ntk_graph* g, ntk_vertex root, ntk_tree** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new ntk_tree{ntk::dfs_nst(g->graph, root)};
  });
}

ntk_status ntk_omega(const ntk_graph* g, ntk_vertex root, const ntk_run_options* options,
                     ntk_trace** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new ntk_trace{ntk::omega_nst(g->graph, root, to_options(options))};
  });
}

ntk_status ntk_local(const ntk_graph* g, const ntk_vertex* targets, size_t target_count,
                     ntk_vertex root, const ntk_run_options* options, ntk_trace** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new ntk_trace{
        ntk::local_normal_tree(g->graph, to_set(targets, target_count), root, to_options(options))};
  });
}

ntk_status ntk_cover_nst(const ntk_graph* g, const ntk_vertex* ids, const size_t* set_sizes,
                         size_t set_count, ntk_vertex root, const ntk_run_options* options,
                         ntk_trace** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (set_count > 0) require(set_sizes, "set_sizes");
    ntk::DispersedCover cover;
    std::size_t offset = 0;
    for (std::size_t k = 0; k < set_count; ++k) {
      cover.push_back(to_set(ids + offset, set_sizes[k]));
      offset += set_sizes[k];
    }
    *out = new ntk_trace{ntk::nst_from_dispersed_cover(g->graph, cover, root, to_options(options))};
  });
}

void ntk_trace_destroy(ntk_trace* trace) { delete trace; }

const char* ntk_trace_status(const ntk_trace* trace) {
  return trace ? ntk::to_string(trace->trace.status).data() : "";
}

size_t ntk_trace_rounds(const ntk_trace* trace) { return trace ? trace->trace.rounds : 0; }

ntk_status ntk_trace_to_json(const ntk_trace* trace, char** out) {
  return guarded([&] {
    require(trace, "trace");
    emit(out, ntk::io::trace_to_json(trace->trace));
  });
}

ntk_status ntk_trace_final_tree(const ntk_trace* trace, ntk_tree** out) {
  return guarded([&] {
    require(trace, "trace");
    require(out, "out");
    *out = new ntk_tree{trace->trace.final_tree};
  });
}

ntk_status ntk_kappa(const ntk_graph* g, ntk_vertex v, ntk_vertex w, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = ntk::kappa(g->graph, v, w);
  });
}

ntk_status ntk_kappa_json(const ntk_graph* g, ntk_vertex v, ntk_vertex w, char** out) {
  return guarded([&] {
    require(g, "graph");
    emit(out, ntk::io::kappa_to_json(ntk::max_independent_paths(g->graph, v, w)));
  });
}

ntk_status ntk_separator_json(const ntk_graph* g, const ntk_vertex* a, size_t a_count,
                              const ntk_vertex* b, size_t b_count, char** out) {
  return guarded([&] {
    require(g, "graph");
    emit(out, ntk::io::separator_to_json(
                  ntk::min_separator(g->graph, to_set(a, a_count), to_set(b, b_count))));
  });
}

ntk_status ntk_fat_tk_find(const ntk_graph* g, const ntk_vertex* branch, size_t branch_count,
                           size_t m, int* found, char** out) {
  return guarded([&] {
    require(g, "graph");
    if (branch_count > 0) require(branch, "branch");
    std::vector<ntk::VertexId> b(branch, branch + branch_count);
    ntk::FatTKSearch search = ntk::find_fat_tk(g->graph, b, m);
    if (found) *found = search.found() ? 1 : 0;
    emit(out, ntk::io::search_to_json(search, b));
  });
}

ntk_status ntk_fat_tk_verify(const ntk_graph* g, const char* certificate_json, int* valid,
                             char** out) {
  return guarded([&] {
    require(g, "graph");
    require(certificate_json, "certificate_json");
    ntk::VerifyResult result =
        ntk::verify_fat_tk(g->graph, ntk::io::read_certificate_json(certificate_json));
    if (valid) *valid = result.valid ? 1 : 0;
    emit(out, ntk::io::verify_to_json(result));
  });
}

ntk_status ntk_kappa_necessary(const ntk_graph* g, const ntk_vertex* branch, size_t branch_count,
                               size_t m, int* holds) {
  return guarded([&] {
    require(g, "graph");
    require(holds, "holds");
    if (branch_count > 0) require(branch, "branch");
    *holds = ntk::kappa_necessary_check(
                 g->graph, std::vector<ntk::VertexId>(branch, branch + branch_count), m)
                 ? 1
                 : 0;
  });
}

ntk_status ntk_dispersed(const ntk_graph* g, const ntk_vertex* probe, size_t probe_count, size_t n,
                         size_t m, size_t s, size_t search_budget, int* dispersed, char** out) {
  return guarded([&] {
    require(g, "graph");
    ntk::DispersednessVerdict verdict =
        ntk::is_dispersed(g->graph, to_set(probe, probe_count), {n, m, s, search_budget});
    if (dispersed) *dispersed = verdict.dispersed ? 1 : 0;
    emit(out, ntk::io::verdict_to_json(verdict));
  });
}

}  // extern "C"
