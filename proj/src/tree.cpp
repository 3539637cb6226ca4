#include "ntk/tree.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <string>

namespace ntk {

namespace {

void require_vertex(const RootedTree& t, VertexId v) {
  if (!t.contains(v))
    throw Error(Errc::contract_violation, "vertex " + std::to_string(v) + " is not in the tree");
}

// Shortest path from `from` to `to` using only vertices of `allowed`.
std::vector<VertexId> path_within(const Graph& g, const VertexSet& allowed, VertexId from,
                                  VertexId to) {
  std::map<VertexId, VertexId> prev{{from, from}};
  std::deque<VertexId> queue{from};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (VertexId y : g.neighbors(x)) {
      if (!allowed.contains(y) || prev.contains(y)) continue;
      prev[y] = x;
      queue.push_back(y);
    }
  }
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(prev.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

RootedTree::RootedTree(VertexId root) : root_(root) { depth_[root] = 0; }

RootedTree::RootedTree(VertexId root, std::map<VertexId, VertexId> parent)
    : root_(root), parent_(std::move(parent)) {
  if (parent_.contains(root_))
    throw Error(Errc::invalid_argument, "root " + std::to_string(root_) + " has a parent");
  depth_[root_] = 0;
  // Resolve depths iteratively; a vertex on a cycle or below an unknown
  // vertex never reaches the root.
  std::vector<VertexId> stack;
  for (const auto& [child, unused] : parent_) {
    VertexId x = child;
    stack.clear();
    while (!depth_.contains(x)) {
      stack.push_back(x);
      if (stack.size() > parent_.size())
        throw Error(Errc::invalid_argument, "parent map has a cycle through " + std::to_string(x));
      auto it = parent_.find(x);
      if (it == parent_.end())
        throw Error(Errc::invalid_argument,
                    "vertex " + std::to_string(x) + " does not reach the root");
      x = it->second;
    }
    std::size_t d = depth_.at(x);
    while (!stack.empty()) {
      depth_[stack.back()] = ++d;
      stack.pop_back();
    }
  }
}

std::optional<VertexId> RootedTree::parent(VertexId v) const {
  require_vertex(*this, v);
  if (auto it = parent_.find(v); it != parent_.end()) return it->second;
  return std::nullopt;
}

std::size_t RootedTree::depth(VertexId v) const {
  require_vertex(*this, v);
  return depth_.at(v);
}

VertexSet RootedTree::vertices() const {
  VertexSet out;
  for (const auto& [v, unused] : depth_) out.insert(out.end(), v);
  return out;
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  for (const auto& [child, par] : parent_) out.push_back({std::min(child, par), std::max(child, par)});
  std::sort(out.begin(), out.end());
  return out;
}

std::map<VertexId, std::vector<VertexId>> RootedTree::children() const {
  std::map<VertexId, std::vector<VertexId>> out;
  for (const auto& [v, unused] : depth_) out[v];
  for (const auto& [child, par] : parent_) out[par].push_back(child);
  return out;
}

bool tree_leq(const RootedTree& t, VertexId u, VertexId v) {
  std::size_t du = t.depth(u);
  std::size_t dv = t.depth(v);
  if (du > dv) return false;
  while (dv > du) {
    v = *t.parent(v);
    --dv;
  }
  return u == v;
}

VertexSet down_closure(const RootedTree& t, VertexId v) {
  require_vertex(t, v);
  VertexSet out{v};
  for (auto p = t.parent(v); p; p = t.parent(*p)) out.insert(*p);
  return out;
}

bool is_chain(const RootedTree& t, const VertexSet& s) {
  for (VertexId v : s) require_vertex(t, v);
  // A set is a chain iff, sorted by depth, each element lies below the next.
  std::vector<VertexId> by_depth(s.begin(), s.end());
  std::stable_sort(by_depth.begin(), by_depth.end(),
                   [&](VertexId a, VertexId b) { return t.depth(a) < t.depth(b); });
  for (std::size_t i = 1; i < by_depth.size(); ++i)
    if (!tree_leq(t, by_depth[i - 1], by_depth[i])) return false;
  return true;
}

bool is_antichain(const RootedTree& t, const VertexSet& s) {
  for (auto a = s.begin(); a != s.end(); ++a)
    for (auto b = std::next(a); b != s.end(); ++b)
      if (comparable(t, *a, *b)) return false;
  return true;
}

VertexId chain_maximum(const RootedTree& t, const VertexSet& chain) {
  if (chain.empty()) throw Error(Errc::contract_violation, "maximum of an empty chain");
  return *std::max_element(chain.begin(), chain.end(), [&](VertexId a, VertexId b) {
    return t.depth(a) < t.depth(b);
  });
}

NormalityReport is_normal(const Graph& g, const RootedTree& t) {
  const VertexSet tree_vertices = t.vertices();
  require_subset(g, tree_vertices, "tree");
  for (const auto& [child, par] : t.parent_map())
    if (!g.adjacent(child, par))
      throw Error(Errc::contract_violation, "tree edge " + std::to_string(par) + "-" +
                                                std::to_string(child) + " is not a graph edge");

  NormalityReport report;
  // Chords: every graph edge between tree vertices must join comparable ends.
  for (VertexId u : tree_vertices) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u || !tree_vertices.contains(v)) continue;
      if (!comparable(t, u, v)) {
        report.normal = false;
        report.witness = NormalityWitness{u, v, {u, v}};
        return report;
      }
    }
  }
  // Paths through a component D of g - T: their ends are exactly pairs in N(D).
  for (const VertexSet& d : components(g, tree_vertices)) {
    VertexSet nd = neighborhood(g, d, tree_vertices);
    for (auto a = nd.begin(); a != nd.end(); ++a) {
      for (auto b = std::next(a); b != nd.end(); ++b) {
        if (comparable(t, *a, *b)) continue;
        // Enter D from a, walk inside D, leave to b.
        VertexSet inner = d;
        inner.insert(*b);
        VertexId entry = *std::find_if(g.neighbors(*a).begin(), g.neighbors(*a).end(),
                                       [&](VertexId x) { return d.contains(x); });
        std::vector<VertexId> path{*a};
        for (VertexId x : path_within(g, inner, entry, *b)) path.push_back(x);
        report.normal = false;
        report.witness = NormalityWitness{*a, *b, std::move(path)};
        return report;
      }
    }
  }
  return report;
}

bool separates_incomparable(const Graph& g, const RootedTree& t, VertexId u, VertexId v) {
  if (comparable(t, u, v))
    throw Error(Errc::contract_violation, "vertices " + std::to_string(u) + " and " +
                                              std::to_string(v) + " are comparable");
  VertexSet common;
  VertexSet du = down_closure(t, u);
  VertexSet dv = down_closure(t, v);
  std::set_intersection(du.begin(), du.end(), dv.begin(), dv.end(),
                        std::inserter(common, common.end()));
  return !connected_between(g, {u}, {v}, common);
}

}  // namespace ntk
