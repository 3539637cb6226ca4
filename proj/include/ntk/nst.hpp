#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ntk/graph.hpp"
#include "ntk/tree.hpp"

namespace ntk {

/// Ordered vertex sets V_1, ..., V_k whose union is the vertex set of the host graph.
using DispersedCover = std::vector<VertexSet>;

/// Depth-first spanning tree; children are explored in ascending id order.
/// Throws Errc::disconnected if g is not connected.
RootedTree dfs_nst(const Graph& g, VertexId root);

/// Normal spanning tree of the subgraph induced by `c`, rooted at r.
RootedTree jung_subtree(const Graph& g, const VertexSet& c, VertexId root);

/**
 * Glues `subtree` below the top of N(c).
 *
 * `c` must be a component of g - t whose neighbourhood is a chain of t, and
 * the root of `subtree` must be adjacent to the maximum t_C of that chain.
 * The subtree may cover only part of c. The result has parent(root) = t_C.
 */
RootedTree attach(const Graph& g, const RootedTree& t, const VertexSet& c,
                  const RootedTree& subtree);

/// Result of growing a normal tree into one component.
struct Extension {
  RootedTree tree;
  VertexId attach_vertex;  // t_D: maximum of N(D)
  VertexId entry_vertex;   // r_D: least-id neighbour of t_D in D
  VertexSet added;
};

/**
 * Extends a finite normal tree into component `d` so that it covers `targets`.
 *
 * Builds a DFS tree of d rooted at r_D, keeps only the down-closure of
 * targets and r_D, and attaches it at t_D. Throws Errc::contract_violation
 * when N(d) is not a chain (the input tree was not normal), when targets is
 * empty, or when targets is not a subset of d.
 */
Extension extend_component(const Graph& g, const RootedTree& t, const VertexSet& d,
                           const VertexSet& targets);

inline RootedTree extend_into_component(const Graph& g, const RootedTree& t,
                                        const VertexSet& d, const VertexSet& targets) {
  return extend_component(g, t, d, targets).tree;
}

enum class RunStatus { spanning, budget_exhausted, target_covered };

std::string_view to_string(RunStatus status) noexcept;

struct PathSelection {
  VertexId v;
  VertexId w;
  std::size_t index;  // 1-based position in the canonical family of (v, w)
};

struct ExtensionStep {
  std::size_t step = 0;  // n: the extension turns T_n into part of T_{n+1}
  VertexSet component;
  VertexId attach_vertex = 0;
  VertexId entry_vertex = 0;
  VertexSet targets;
  std::vector<PathSelection> selected;
  bool fallback = false;  // no selected path met D; least-id vertex of D used
  VertexSet added;
};

struct RunTrace {
  VertexId root = 0;
  std::vector<ExtensionStep> steps;
  std::size_t rounds = 0;  // number of completed steps n
  RootedTree final_tree{0};
  RunStatus status = RunStatus::spanning;
};

struct RunOptions {
  /// Maximum number of steps; unlimited when empty.
  std::optional<std::size_t> step_budget;
  /// Path families are only fixed for pairs with kappa <= kappa_small.
  std::optional<std::size_t> kappa_small;
};

/// The omega-length construction: at every step extend into each component
/// D of g - T_n far enough to cover the least-index independent path of
/// every pair in N(D) that meets D.
RunTrace omega_nst(const Graph& g, VertexId root, const RunOptions& options = {});

/// Variant that only grows into components meeting `targets` and always
/// covers the least-id target of such a component.
RunTrace local_normal_tree(const Graph& g, const VertexSet& targets, VertexId root,
                           const RunOptions& options = {});

/// Variant that additionally covers the least-id vertex of D in the first
/// cover set meeting D.
RunTrace nst_from_dispersed_cover(const Graph& g, const DispersedCover& cover, VertexId root,
                                  const RunOptions& options = {});

/// T_n: the tree after n completed steps (T_0 is the root alone).
RootedTree tree_at_step(const RunTrace& trace, std::size_t n);

/// Distance classes from the root, V_0 = {root}.
DispersedCover levels_of(const RootedTree& t);

}  // namespace ntk
