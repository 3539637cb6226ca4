#include "ntk/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace ntk {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::contract_violation: return "contract violation";
    case Errc::disconnected: return "disconnected graph";
    case Errc::inseparable: return "inseparable";
    case Errc::parse_error: return "parse error";
    case Errc::io_error: return "i/o error";
    case Errc::generator_failure: return "generator failure";
  }
  return "unknown error";
}

Graph::Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges)
    : ids_(std::move(vertices)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw Error(Errc::invalid_argument, "duplicate vertex id");
  adj_.resize(ids_.size());
  for (const Edge& e : edges) {
    if (e.u == e.v)
      throw Error(Errc::invalid_argument, "self-loop at vertex " + std::to_string(e.u));
    if (!contains(e.u) || !contains(e.v))
      throw Error(Errc::invalid_argument, "edge " + std::to_string(e.u) + "-" +
                                              std::to_string(e.v) + " uses an unknown vertex");
    adj_[index_of(e.u)].push_back(e.v);
    adj_[index_of(e.v)].push_back(e.u);
  }
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    auto& list = adj_[i];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end())
      throw Error(Errc::invalid_argument, "parallel edge " + std::to_string(ids_[i]) + "-" +
                                              std::to_string(*dup));
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

Graph Graph::from_edges(const std::vector<Edge>& edges,
                        const std::vector<VertexId>& extra_vertices) {
  VertexSet ids(extra_vertices.begin(), extra_vertices.end());
  for (const Edge& e : edges) {
    ids.insert(e.u);
    ids.insert(e.v);
  }
  return Graph(std::vector<VertexId>(ids.begin(), ids.end()), edges);
}

bool Graph::contains(VertexId v) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::size_t Graph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v)
    throw Error(Errc::contract_violation, "unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - ids_.begin());
}

bool Graph::adjacent(VertexId u, VertexId v) const noexcept {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adj_[index_of(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return adj_[index_of(v)];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i)
    for (VertexId w : adj_[i])
      if (ids_[i] < w) out.push_back({ids_[i], w});
  return out;
}

void require_subset(const Graph& g, const VertexSet& s, const char* what) {
  for (VertexId v : s)
    if (!g.contains(v))
      throw Error(Errc::contract_violation,
                  std::string(what) + " contains vertex " + std::to_string(v) + " not in the graph");
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  require_subset(g, removed, "removed set");
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId v : removed) seen[g.index_of(v)] = 1;

  std::vector<VertexSet> out;
  std::deque<VertexId> queue;
  for (VertexId start : g.vertices()) {
    if (seen[g.index_of(start)]) continue;
    VertexSet comp;
    seen[g.index_of(start)] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      comp.insert(x);
      for (VertexId y : g.neighbors(x)) {
        auto& mark = seen[g.index_of(y)];
        if (!mark) {
          mark = 1;
          queue.push_back(y);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  // Starting vertices are scanned in ascending order, so components are
  // already sorted by their least vertex.
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& d, const VertexSet& inside) {
  require_subset(g, d, "component");
  require_subset(g, inside, "neighbourhood domain");
  for (VertexId v : d)
    if (inside.contains(v))
      throw Error(Errc::contract_violation,
                  "neighbourhood query with overlapping sets at vertex " + std::to_string(v));
  VertexSet out;
  for (VertexId v : d)
    for (VertexId w : g.neighbors(v))
      if (inside.contains(w)) out.insert(w);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_subset(g, s, "induced vertex set");
  std::vector<Edge> edges;
  for (VertexId v : s)
    for (VertexId w : g.neighbors(v))
      if (v < w && s.contains(w)) edges.push_back({v, w});
  return Graph(std::vector<VertexId>(s.begin(), s.end()), edges);
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool connected_between(const Graph& g, const VertexSet& a, const VertexSet& b,
                       const VertexSet& removed) {
  require_subset(g, a, "source set");
  require_subset(g, b, "target set");
  require_subset(g, removed, "removed set");
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId v : removed) seen[g.index_of(v)] = 1;
  std::deque<VertexId> queue;
  for (VertexId v : a) {
    if (seen[g.index_of(v)]) continue;
    seen[g.index_of(v)] = 1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (b.contains(x)) return true;
    for (VertexId y : g.neighbors(x)) {
      auto& mark = seen[g.index_of(y)];
      if (!mark) {
        mark = 1;
        queue.push_back(y);
      }
    }
  }
  return false;
}

}  // namespace ntk
