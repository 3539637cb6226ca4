#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "ntk/error.hpp"

namespace ntk {

/// Vertex identifiers are totally ordered; every deterministic choice made by
/// the algorithms in this library resolves to the least id.
using VertexId = std::uint64_t;

using VertexSet = std::set<VertexId>;

struct Edge {
  VertexId u;
  VertexId v;

  auto operator<=>(const Edge&) const = default;
};

/**
 * Finite simple undirected graph with stable vertex ids.
 *
 * Immutable after construction. Vertices are kept sorted and every
 * adjacency list is sorted ascending, so iteration order is the id order.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws Errc::invalid_argument on self-loops, parallel edges, duplicate
  /// vertices, or edges whose ends are not listed in `vertices`.
  Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges);

  /// Vertex set is the set of edge ends plus `extra_vertices`.
  static Graph from_edges(const std::vector<Edge>& edges,
                          const std::vector<VertexId>& extra_vertices = {});

  const std::vector<VertexId>& vertices() const noexcept { return ids_; }
  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return ids_.empty(); }

  bool contains(VertexId v) const noexcept;
  bool adjacent(VertexId u, VertexId v) const noexcept;

  /// Sorted neighbours of `v`. Throws Errc::contract_violation for unknown v.
  std::span<const VertexId> neighbors(VertexId v) const;

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// Dense position of `v` in vertices(); unknown ids are a contract violation.
  std::size_t index_of(VertexId v) const;

  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  VertexSet vertex_set() const { return VertexSet(ids_.begin(), ids_.end()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

/// Connected components of `g - removed`, sorted by least contained id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

/// Vertices of `inside` with a neighbour in `d`. `d` and `inside` must be disjoint.
VertexSet neighborhood(const Graph& g, const VertexSet& d, const VertexSet& inside);

Graph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

/// True iff some vertex of `a` reaches some vertex of `b` in g - removed.
/// Vertices of `a` or `b` that lie in `removed` are ignored.
bool connected_between(const Graph& g, const VertexSet& a, const VertexSet& b,
                       const VertexSet& removed = {});

/// Throws Errc::contract_violation unless every vertex of `s` is in `g`.
void require_subset(const Graph& g, const VertexSet& s, const char* what);

}  // namespace ntk
