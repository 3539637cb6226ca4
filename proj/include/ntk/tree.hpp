#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ntk/graph.hpp"

namespace ntk {

/**
 * Rooted tree stored as a parent map.
 *
 * Induces the tree order: u <=_T v iff u lies on the root-to-v path. The
 * tree is validated on construction (acyclic, every vertex reaches the root)
 * and immutable afterwards. It is not tied to a host graph; operations that
 * need one take it explicitly.
 */
class RootedTree {
 public:
  explicit RootedTree(VertexId root);

  /// `parent` maps every non-root vertex to its parent. Throws
  /// Errc::invalid_argument if the map does not describe a tree on root.
  RootedTree(VertexId root, std::map<VertexId, VertexId> parent);

  VertexId root() const noexcept { return root_; }
  std::size_t size() const noexcept { return depth_.size(); }
  bool contains(VertexId v) const noexcept { return depth_.contains(v); }

  /// nullopt for the root. Unknown vertices are a contract violation.
  std::optional<VertexId> parent(VertexId v) const;
  std::size_t depth(VertexId v) const;

  const std::map<VertexId, VertexId>& parent_map() const noexcept { return parent_; }
  VertexSet vertices() const;

  /// Tree edges as {child, parent} pairs normalised to u < v.
  std::vector<Edge> edges() const;

  /// Children of every vertex, each list ascending.
  std::map<VertexId, std::vector<VertexId>> children() const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  VertexId root_;
  std::map<VertexId, VertexId> parent_;
  std::map<VertexId, std::size_t> depth_;
};

bool tree_leq(const RootedTree& t, VertexId u, VertexId v);

inline bool comparable(const RootedTree& t, VertexId u, VertexId v) {
  return tree_leq(t, u, v) || tree_leq(t, v, u);
}

/// The down-closure of v: all u with u <=_T v.
VertexSet down_closure(const RootedTree& t, VertexId v);

bool is_chain(const RootedTree& t, const VertexSet& s);

bool is_antichain(const RootedTree& t, const VertexSet& s);

/// The <=_T-maximum of a nonempty chain.
VertexId chain_maximum(const RootedTree& t, const VertexSet& chain);

struct NormalityWitness {
  VertexId u;
  VertexId v;
  /// A T-path from u to v; length 1 for a chord.
  std::vector<VertexId> path;
};

struct NormalityReport {
  bool normal = true;
  std::optional<NormalityWitness> witness;
};

/**
 * Decides whether `t` is a normal tree in `g`.
 *
 * Checks the two ways a T-path can arise: a chord between tree vertices, or
 * a path whose interior is a component D of g - T, in which case its ends
 * lie in N(D). `t` need not be spanning. Throws Errc::contract_violation if
 * a tree edge or tree vertex is missing from `g`.
 */
NormalityReport is_normal(const Graph& g, const RootedTree& t);

/// Whether the common down-closure of two incomparable vertices separates
/// them in g. Always true when `t` is normal.
bool separates_incomparable(const Graph& g, const RootedTree& t, VertexId u, VertexId v);

}  // namespace ntk
