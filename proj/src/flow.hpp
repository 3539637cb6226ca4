#pragma once

// Unit-vertex-capacity flow networks over a Graph. Internal to the library.

#include <cstddef>
#include <limits>
#include <vector>

#include "ntk/graph.hpp"

namespace ntk::detail {

/// Residual network with integer capacities and optional unit costs.
/// Arcs are explored in insertion order, which makes every search
/// deterministic.
class FlowNetwork {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  explicit FlowNetwork(std::size_t nodes) : out_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, int capacity, int cost = 0);

  /// Edmonds-Karp; stops once `limit` units are routed.
  int max_flow(std::size_t source, std::size_t sink, int limit = kInfinite);

  /// Successive shortest paths on costs; stops once `limit` units are routed.
  int min_cost_flow(std::size_t source, std::size_t sink, int limit);

  /// Nodes reachable from `source` in the residual network.
  std::vector<char> residual_reachable(std::size_t source) const;

  std::size_t node_count() const noexcept { return out_.size(); }
  const std::vector<std::size_t>& arcs_from(std::size_t node) const { return out_[node]; }
  std::size_t arc_head(std::size_t arc) const { return arcs_[arc].to; }
  int arc_flow(std::size_t arc) const { return arcs_[arc].flow; }
  bool is_forward(std::size_t arc) const { return arc % 2 == 0; }

 private:
  struct Arc {
    std::size_t to;
    int capacity;
    int cost;
    int flow;
  };
  int residual(std::size_t arc) const { return arcs_[arc].capacity - arcs_[arc].flow; }
  void push(std::size_t arc, int amount);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

/**
 * Vertex-split network for disjoint-path problems on an undirected graph.
 *
 * Every graph vertex x becomes in(x) -> out(x). Vertices in `sources` and
 * `sinks` are attached to a super source / super sink. Source vertices are
 * uncapacitated; sink vertices are uncapacitated unless `cuttable_sinks` is
 * set. All other vertices carry capacity 1. Vertices in `blocked` are
 * dropped, as are edges listed in `skipped_edges`.
 */
struct SplitOptions {
  VertexSet blocked;
  std::vector<Edge> skipped_edges;
  bool cuttable_sinks = false;
  bool unit_costs = false;
};

class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
               const SplitOptions& options = {});

  int max_flow(int limit = FlowNetwork::kInfinite);
  int min_cost_flow(int limit);

  /// Decomposes the current flow into source-to-sink vertex sequences.
  std::vector<std::vector<VertexId>> paths() const;

  /// Vertices whose unit capacity is saturated across the minimum cut.
  /// Valid after max_flow() ran to completion.
  VertexSet min_cut() const;

 private:
  std::size_t in(std::size_t i) const { return 2 * i; }
  std::size_t out(std::size_t i) const { return 2 * i + 1; }

  const Graph& g_;
  FlowNetwork net_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<std::size_t> vertex_arc_;  // in(x)->out(x) arc per vertex, or npos
  std::vector<char> is_source_;
  std::vector<char> is_sink_;
};

}  // namespace ntk::detail
