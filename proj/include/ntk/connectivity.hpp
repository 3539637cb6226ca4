#pragma once

#include <cstddef>
#include <vector>

#include "ntk/graph.hpp"

namespace ntk {

/// Vertex sequence of a path; consecutive vertices are adjacent.
using Path = std::vector<VertexId>;

/// True iff `p` is nonempty, repeats no vertex, and follows edges of `g`.
bool is_path_in(const Graph& g, const Path& p);

/**
 * A maximum family of independent v-w paths in canonical order.
 *
 * Paths are pairwise disjoint except at v and w and are sorted
 * lexicographically by vertex sequence. Index k (1-based, as used for
 * least-index selection) refers to paths[k - 1].
 */
struct PathFamily {
  VertexId v = 0;
  VertexId w = 0;
  std::vector<Path> paths;

  std::size_t size() const noexcept { return paths.size(); }
};

struct Separator {
  VertexSet vertices;
  VertexSet side_a;
  VertexSet side_b;
};

/// Maximum number of independent v-w paths. A direct edge counts as one path.
std::size_t kappa(const Graph& g, VertexId v, VertexId w);

PathFamily max_independent_paths(const Graph& g, VertexId v, VertexId w);

/**
 * Minimum vertex set disjoint from a and b meeting every a-b path.
 *
 * Throws Errc::inseparable when an edge joins a and b directly, and
 * Errc::contract_violation when a or b is empty or they intersect.
 */
Separator min_separator(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Whether removing `s` leaves no path between a and b (ends in s excluded).
bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b);

}  // namespace ntk
