// ntk: command-line front end over the ntk C API.
//
// Exit status: 0 success, 1 negative verification result, 2 input error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ntk/ntk.h"

namespace {

enum Exit : int { kOk = 0, kNegative = 1, kInputError = 2 };

struct GraphDeleter {
  void operator()(ntk_graph* g) const { ntk_graph_destroy(g); }
};
struct TreeDeleter {
  void operator()(ntk_tree* t) const { ntk_tree_destroy(t); }
};
struct TraceDeleter {
  void operator()(ntk_trace* t) const { ntk_trace_destroy(t); }
};
struct StringDeleter {
  void operator()(char* s) const { ntk_string_free(s); }
};
using GraphPtr = std::unique_ptr<ntk_graph, GraphDeleter>;
using TreePtr = std::unique_ptr<ntk_tree, TreeDeleter>;
using TracePtr = std::unique_ptr<ntk_trace, TraceDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a given exit status after the message was printed.
struct Failure {
  int exit;
};

void check(ntk_status status) {
  if (status == NTK_OK) return;
  std::cerr << "ntk: " << ntk_status_name(status) << ": " << ntk_last_error() << "\n";
  throw Failure{kInputError};
}

void print(const CString& s) { std::cout << s.get(); }

struct RunConfig {
  // input source: exactly one of these
  std::string input;
  std::string generator;
  std::optional<std::size_t> random_vertices;
  std::size_t radius = 4;
  std::size_t gen_n = 3;
  std::size_t gen_m = 2;
  double density = 0.3;
  std::uint64_t seed = 1;

  std::optional<ntk_vertex> root;
  std::vector<ntk_vertex> targets;
  std::string tree_path;
  std::string cover_path;
  std::string cert_path;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> kappa_small;
  ntk_vertex v = 0;
  ntk_vertex w = 0;
  std::vector<ntk_vertex> side_a;
  std::vector<ntk_vertex> side_b;
  std::vector<ntk_vertex> branch;
  std::vector<ntk_vertex> probe;
  std::size_t n = 3;
  std::size_t m = 2;
  std::size_t s = 0;
  std::string format = "json";
};

GraphPtr load_graph(const RunConfig& cfg) {
  int sources = !cfg.input.empty() + !cfg.generator.empty() + cfg.random_vertices.has_value();
  if (sources != 1) {
    std::cerr << "ntk: exactly one of --input, --gen, --random is required\n";
    throw Failure{kInputError};
  }
  ntk_graph* g = nullptr;
  if (!cfg.input.empty())
    check(ntk_graph_load(cfg.input.c_str(), &g));
  else if (!cfg.generator.empty())
    check(ntk_graph_generate(cfg.generator.c_str(), cfg.gen_n, cfg.gen_m, cfg.radius, &g));
  else
    check(ntk_graph_random(*cfg.random_vertices, cfg.density, cfg.seed, &g));
  return GraphPtr(g);
}

ntk_vertex root_of(const RunConfig& cfg, const ntk_graph* g) {
  if (cfg.root) return *cfg.root;
  ntk_vertex least = 0;
  if (ntk_graph_vertices(g, &least, 1) == 0) {
    std::cerr << "ntk: the graph is empty\n";
    throw Failure{kInputError};
  }
  return least;
}

ntk_run_options run_options(const RunConfig& cfg) {
  return {cfg.budget.value_or(NTK_UNLIMITED), cfg.kappa_small.value_or(NTK_UNLIMITED)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "ntk: cannot open " << path << "\n";
    throw Failure{kInputError};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_json_format(const RunConfig& cfg, const std::string& command) {
  if (cfg.format != "json") {
    std::cerr << "ntk: " << command << " only supports --format json\n";
    throw Failure{kInputError};
  }
}

// NTK_LOG=steps prints one line per extension, NTK_LOG=full the whole record.
void log_trace(const char* trace_json) {
  const char* level = std::getenv("NTK_LOG");
  if (!level || std::string(level) == "off") return;
  const bool full = std::string(level) == "full";
  auto trace = nlohmann::json::parse(trace_json);
  for (const auto& step : trace.at("steps")) {
    if (full) {
      std::cerr << "[ntk] " << step.dump() << "\n";
      continue;
    }
    std::cerr << "[ntk] step " << step.at("step") << ": component of size "
              << step.at("component").size() << " attached at " << step.at("attach_vertex")
              << " via " << step.at("entry_vertex") << ", +" << step.at("added").size()
              << " vertices" << (step.at("fallback").get<bool>() ? " (fallback)" : "") << "\n";
  }
  std::cerr << "[ntk] status " << trace.at("status").get<std::string>() << " after "
            << trace.at("rounds") << " steps\n";
}

int emit_trace(const RunConfig& cfg, const ntk_graph* g, ntk_trace* raw) {
  TracePtr trace(raw);
  char* text = nullptr;
  check(ntk_trace_to_json(trace.get(), &text));
  CString json(text);
  log_trace(json.get());
  if (cfg.format == "dot") {
    ntk_tree* t = nullptr;
    check(ntk_trace_final_tree(trace.get(), &t));
    TreePtr tree(t);
    check(ntk_tree_to_dot(g, tree.get(), &text));
    print(CString(text));
  } else {
    print(json);
  }
  return kOk;
}

int cmd_nst(const RunConfig& cfg) {
  GraphPtr g = load_graph(cfg);
  ntk_tree* t = nullptr;
  check(ntk_dfs_nst(g.get(), root_of(cfg, g.get()), &t));
  TreePtr tree(t);
  char* text = nullptr;
  if (cfg.format == "dot")
    check(ntk_tree_to_dot(g.get(), tree.get(), &text));
  else
    check(ntk_tree_to_json(tree.get(), &text));
  print(CString(text));
  return kOk;
}

int cmd_omega(const RunConfig& cfg) {
  GraphPtr g = load_graph(cfg);
  ntk_run_options opts = run_options(cfg);
  ntk_trace* trace = nullptr;
  check(ntk_omega(g.get(), root_of(cfg, g.get()), &opts, &trace));
  return emit_trace(cfg, g.get(), trace);
}

int cmd_local(const RunConfig& cfg) {
  GraphPtr g = load_graph(cfg);
  ntk_run_options opts = run_options(cfg);
  ntk_trace* trace = nullptr;
  check(ntk_local(g.get(), cfg.targets.data(), cfg.targets.size(), root_of(cfg, g.get()), &opts,
                  &trace));
  return emit_trace(cfg, g.get(), trace);
}

int cmd_cover_nst(const RunConfig& cfg) {
  GraphPtr g = load_graph(cfg);
  std::vector<ntk_vertex> ids;
  std::vector<std::size_t> sizes;
  try {
    auto cover = nlohmann::json::parse(slurp(cfg.cover_path));
    for (const auto& part : cover) {
      sizes.push_back(part.size());
      for (const auto& v : part) ids.push_back(v.get<ntk_vertex>());
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ntk: bad cover file " << cfg.cover_path << ": " << e.what() << "\n";
    return kInputError;
  }
  ntk_run_options opts = run_options(cfg);
  ntk_trace* trace = nullptr;
  check(ntk_cover_nst(g.get(), ids.data(), sizes.data(), sizes.size(), root_of(cfg, g.get()),
                      &opts, &trace));
  return emit_trace(cfg, g.get(), trace);
}

int cmd_levels(const RunConfig& cfg) {
  require_json_format(cfg, "levels");
  TreePtr tree;
  ntk_tree* t = nullptr;
  if (!cfg.tree_path.empty()) {
    check(ntk_tree_load(cfg.tree_path.c_str(), &t));
  } else {
    GraphPtr g = load_graph(cfg);
    check(ntk_dfs_nst(g.get(), root_of(cfg, g.get()), &t));
  }
  tree.reset(t);
  char* text = nullptr;
  check(ntk_tree_levels_json(tree.get(), &text));
  print(CString(text));
  return kOk;
}

int cmd_check_normal(const RunConfig& cfg) {
  require_json_format(cfg, "check-normal");
  GraphPtr g = load_graph(cfg);
  ntk_tree* t = nullptr;
  check(ntk_tree_load(cfg.tree_path.c_str(), &t));
  TreePtr tree(t);
  int normal = 0;
  char* text = nullptr;
  check(ntk_check_normal(g.get(), tree.get(), &normal, &text));
  print(CString(text));
  return normal ? kOk : kNegative;
}

int cmd_kappa(const RunConfig& cfg) {
  require_json_format(cfg, "kappa");
  GraphPtr g = load_graph(cfg);
  char* text = nullptr;
  check(ntk_kappa_json(g.get(), cfg.v, cfg.w, &text));
  print(CString(text));
  return kOk;
}

int cmd_separator(const RunConfig& cfg) {
  require_json_format(cfg, "separator");
  GraphPtr g = load_graph(cfg);
  char* text = nullptr;
  ntk_status status = ntk_separator_json(g.get(), cfg.side_a.data(), cfg.side_a.size(),
                                         cfg.side_b.data(), cfg.side_b.size(), &text);
  if (status == NTK_ERR_INSEPARABLE) {
    nlohmann::json out = {{"separator", nullptr}, {"reason", ntk_last_error()}};
    std::cout << out.dump(2) << "\n";
    return kNegative;
  }
  check(status);
  print(CString(text));
  return kOk;
}

int cmd_fat_tk_find(const RunConfig& cfg) {
  require_json_format(cfg, "fat-tk-find");
  GraphPtr g = load_graph(cfg);
  int found = 0;
  char* text = nullptr;
  check(ntk_fat_tk_find(g.get(), cfg.branch.data(), cfg.branch.size(), cfg.m, &found, &text));
  print(CString(text));
  return found ? kOk : kNegative;
}

int cmd_fat_tk_verify(const RunConfig& cfg) {
  require_json_format(cfg, "fat-tk-verify");
  GraphPtr g = load_graph(cfg);
  std::string cert = slurp(cfg.cert_path);
  int valid = 0;
  char* text = nullptr;
  check(ntk_fat_tk_verify(g.get(), cert.c_str(), &valid, &text));
  print(CString(text));
  return valid ? kOk : kNegative;
}

int cmd_dispersed(const RunConfig& cfg) {
  require_json_format(cfg, "dispersed");
  GraphPtr g = load_graph(cfg);
  int dispersed = 0;
  char* text = nullptr;
  check(ntk_dispersed(g.get(), cfg.probe.data(), cfg.probe.size(), cfg.n, cfg.m, cfg.s,
                      cfg.budget.value_or(16), &dispersed, &text));
  print(CString(text));
  return dispersed ? kOk : kNegative;
}

int cmd_gen_list(const RunConfig& cfg) {
  require_json_format(cfg, "gen-list");
  char* text = nullptr;
  check(ntk_generators_json(&text));
  print(CString(text));
  return kOk;
}

int cmd_graph(const RunConfig& cfg) {
  GraphPtr g = load_graph(cfg);
  char* text = nullptr;
  if (cfg.format == "dot")
    check(ntk_graph_to_dot(g.get(), &text));
  else
    check(ntk_graph_to_json(g.get(), &text));
  print(CString(text));
  return kOk;
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.input, "graph file (.json, otherwise edge list)");
  sub->add_option("--gen", cfg.generator, "built-in generator (see gen-list)");
  sub->add_option("--radius", cfg.radius, "truncation radius for --gen");
  sub->add_option("--gen-n", cfg.gen_n, "fat-tk-gen branch vertex count");
  sub->add_option("--gen-m", cfg.gen_m, "fat-tk-gen multiplicity");
  sub->add_option("--random", cfg.random_vertices, "random connected graph on this many vertices");
  sub->add_option("--density", cfg.density, "extra edge probability for --random")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--seed", cfg.seed, "seed for --random");
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
}

void add_run_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--root", cfg.root, "root vertex (default: least id)");
  sub->add_option("--budget", cfg.budget, "maximum number of steps")->check(CLI::PositiveNumber);
  sub->add_option("--kappa-small", cfg.kappa_small,
                  "only fix path families for pairs with kappa at most this");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal spanning tree constructions, connectivity and fat TK certificates"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int(const RunConfig&)> handler;
  auto command = [&](const char* name, const char* help, int (*fn)(const RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  auto* nst = command("nst", "depth-first normal spanning tree", cmd_nst);
  add_input_options(nst, cfg);
  nst->add_option("--root", cfg.root, "root vertex (default: least id)");

  auto* omega = command("omega", "omega-length normal tree construction", cmd_omega);
  add_input_options(omega, cfg);
  add_run_options(omega, cfg);

  auto* local = command("local", "normal tree containing a target set", cmd_local);
  add_input_options(local, cfg);
  add_run_options(local, cfg);
  local->add_option("--targets", cfg.targets, "target vertices")->delimiter(',')->required();

  auto* cover = command("cover-nst", "normal spanning tree guided by a vertex cover", cmd_cover_nst);
  add_input_options(cover, cfg);
  add_run_options(cover, cfg);
  cover->add_option("--cover", cfg.cover_path, "JSON file [[ids...], ...]")->required();

  auto* levels = command("levels", "levels of a tree (default: of the DFS tree)", cmd_levels);
  add_input_options(levels, cfg);
  levels->add_option("--tree", cfg.tree_path, "tree JSON file");
  levels->add_option("--root", cfg.root, "root of the DFS tree when --tree is absent");

  auto* check_normal = command("check-normal", "check a tree for normality", cmd_check_normal);
  add_input_options(check_normal, cfg);
  check_normal->add_option("--tree", cfg.tree_path, "tree JSON file")->required();

  auto* kappa = command("kappa", "independent path family between two vertices", cmd_kappa);
  add_input_options(kappa, cfg);
  kappa->add_option("--v", cfg.v, "first vertex")->required();
  kappa->add_option("--w", cfg.w, "second vertex")->required();

  auto* separator = command("separator", "minimum separator between two vertex sets", cmd_separator);
  add_input_options(separator, cfg);
  separator->add_option("--a", cfg.side_a, "first side")->delimiter(',')->required();
  separator->add_option("--b", cfg.side_b, "second side")->delimiter(',')->required();

  auto* find = command("fat-tk-find", "greedy fat TK certificate search", cmd_fat_tk_find);
  add_input_options(find, cfg);
  find->add_option("--branch", cfg.branch, "branch vertices")->delimiter(',')->required();
  find->add_option("--m", cfg.m, "multiplicity")->check(CLI::PositiveNumber);

  auto* verify = command("fat-tk-verify", "verify a fat TK certificate", cmd_fat_tk_verify);
  add_input_options(verify, cfg);
  verify->add_option("--cert", cfg.cert_path, "certificate JSON file")->required();

  auto* dispersed = command("dispersed", "bounded dispersedness check", cmd_dispersed);
  add_input_options(dispersed, cfg);
  dispersed->add_option("--probe", cfg.probe, "probe vertices")->delimiter(',')->required();
  dispersed->add_option("--n", cfg.n, "branch vertex count");
  dispersed->add_option("--m", cfg.m, "multiplicity");
  dispersed->add_option("--s", cfg.s, "separator size bound");
  dispersed->add_option("--budget", cfg.budget, "candidate branch sets to try")
      ->check(CLI::PositiveNumber);

  auto* gen_list = command("gen-list", "list built-in generators", cmd_gen_list);
  gen_list->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  auto* graph = command("graph", "print the input graph", cmd_graph);
  add_input_options(graph, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return handler(cfg);
  } catch (const Failure& f) {
    return f.exit;
  }
}
