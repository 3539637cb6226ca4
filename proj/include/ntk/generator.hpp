#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ntk/graph.hpp"

namespace ntk {

/**
 * Locally finite, possibly infinite graph given by a neighbour rule.
 *
 * The rule must be symmetric and deterministic. Finite views are obtained
 * through truncate(), which returns the subgraph induced by the ball of
 * radius k around the root.
 */
class GraphGenerator {
 public:
  using NeighborRule = std::function<std::vector<VertexId>(VertexId)>;
  using LabelRule = std::function<std::string(VertexId)>;

  GraphGenerator(std::string name, VertexId root, NeighborRule rule, LabelRule label = {});

  const std::string& name() const noexcept { return name_; }
  VertexId root() const noexcept { return root_; }

  /// Human-readable label of a vertex id (coordinates, signed ray position).
  std::string label(VertexId v) const;

  /// Throws Errc::generator_failure if the rule is asymmetric on the ball.
  Graph truncate(std::size_t radius) const;

 private:
  std::string name_;
  VertexId root_;
  NeighborRule rule_;
  LabelRule label_;
};

struct GeneratorParams {
  std::size_t n = 3;  // fat-tk-gen: number of branch vertices
  std::size_t m = 2;  // fat-tk-gen: parallel multiplicity
};

struct GeneratorInfo {
  std::string name;
  std::string description;
};

const std::vector<GeneratorInfo>& builtin_generators();

/// Throws Errc::invalid_argument for unknown names or bad parameters.
GraphGenerator make_generator(std::string_view name, const GeneratorParams& params = {});

/// Random connected graph on ids 0..n-1: a uniform random recursive tree plus
/// every other pair independently with probability `density`. Deterministic
/// for a given seed.
Graph random_connected_graph(std::size_t n, double density, std::uint64_t seed);

// Id encodings used by the built-in generators.
VertexId double_ray_id(std::int64_t position);
std::int64_t double_ray_position(VertexId id);
VertexId grid_id(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> grid_coordinates(VertexId id);

}  // namespace ntk
