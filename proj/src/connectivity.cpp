#include "ntk/connectivity.hpp"

#include <algorithm>
#include <string>

#include "flow.hpp"

namespace ntk {

namespace {

void require_distinct_pair(const Graph& g, VertexId v, VertexId w) {
  require_subset(g, {v, w}, "vertex pair");
  if (v == w)
    throw Error(Errc::contract_violation,
                "connectivity of vertex " + std::to_string(v) + " with itself");
}

}  // namespace

bool is_path_in(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains(p[i]) || !seen.insert(p[i]).second) return false;
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

std::size_t kappa(const Graph& g, VertexId v, VertexId w) {
  require_distinct_pair(g, v, w);
  detail::SplitNetwork net(g, {v}, {w});
  return static_cast<std::size_t>(net.max_flow());
}

PathFamily max_independent_paths(const Graph& g, VertexId v, VertexId w) {
  require_distinct_pair(g, v, w);
  detail::SplitNetwork net(g, {v}, {w});
  net.max_flow();
  PathFamily family{v, w, net.paths()};
  std::sort(family.paths.begin(), family.paths.end());
  return family;
}

Separator min_separator(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_subset(g, a, "side a");
  require_subset(g, b, "side b");
  if (a.empty() || b.empty())
    throw Error(Errc::contract_violation, "separator sides must be nonempty");
  for (VertexId x : a) {
    if (b.contains(x))
      throw Error(Errc::contract_violation,
                  "separator sides share vertex " + std::to_string(x));
    for (VertexId y : g.neighbors(x))
      if (b.contains(y))
        throw Error(Errc::inseparable, "edge " + std::to_string(x) + "-" + std::to_string(y) +
                                           " joins the two sides");
  }
  detail::SplitNetwork net(g, a, b);
  net.max_flow();
  return Separator{net.min_cut(), a, b};
}

bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b) {
  return !connected_between(g, a, b, s);
}

}  // namespace ntk
