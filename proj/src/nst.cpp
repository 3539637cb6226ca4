#include "ntk/nst.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "ntk/connectivity.hpp"

namespace ntk {

namespace {

void require_component(const Graph& g, const RootedTree& t, const VertexSet& c) {
  if (c.empty()) throw Error(Errc::contract_violation, "empty component");
  require_subset(g, c, "component");
  for (VertexId v : c) {
    if (t.contains(v))
      throw Error(Errc::contract_violation,
                  "component vertex " + std::to_string(v) + " already lies in the tree");
    for (VertexId w : g.neighbors(v))
      if (!c.contains(w) && !t.contains(w))
        throw Error(Errc::contract_violation,
                    "vertex set is not a full component: " + std::to_string(v) + " has neighbour " +
                        std::to_string(w) + " outside it and the tree");
  }
  if (components(induced_subgraph(g, c)).size() != 1)
    throw Error(Errc::contract_violation, "component is not connected");
}

// Top of N(c), which must be a chain.
VertexId attachment_point(const Graph& g, const RootedTree& t, const VertexSet& c) {
  VertexSet nc = neighborhood(g, c, t.vertices());
  if (nc.empty())
    throw Error(Errc::contract_violation, "component has no neighbour in the tree");
  if (!is_chain(t, nc))
    throw Error(Errc::contract_violation,
                "neighbourhood of the component is not a chain; the tree is not normal");
  return chain_maximum(t, nc);
}

RootedTree glue(const RootedTree& t, VertexId at, const RootedTree& subtree) {
  std::map<VertexId, VertexId> parent = t.parent_map();
  for (const auto& [child, par] : subtree.parent_map()) parent[child] = par;
  parent[subtree.root()] = at;
  return RootedTree(t.root(), std::move(parent));
}

// Memoised canonical path families, fixed on first use of a pair.
class FamilyCache {
 public:
  FamilyCache(const Graph& g, std::optional<std::size_t> kappa_small)
      : g_(g), kappa_small_(kappa_small) {}

  const PathFamily* get(VertexId v, VertexId w) {
    auto key = std::minmax(v, w);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      PathFamily family = max_independent_paths(g_, key.first, key.second);
      std::optional<PathFamily> entry;
      if (!kappa_small_ || family.size() <= *kappa_small_) entry = std::move(family);
      it = cache_.emplace(key, std::move(entry)).first;
    }
    return it->second ? &*it->second : nullptr;
  }

 private:
  const Graph& g_;
  std::optional<std::size_t> kappa_small_;
  std::map<std::pair<VertexId, VertexId>, std::optional<PathFamily>> cache_;
};

// Hooks distinguishing the three variants of the construction.
struct Policy {
  // Whether the run extends into component d at all.
  std::function<bool(const VertexSet& d)> wants = [](const VertexSet&) { return true; };
  // Vertices of d that must be covered on top of the selected paths.
  std::function<VertexSet(const VertexSet& d)> extra = [](const VertexSet&) { return VertexSet{}; };
  // Early stop with status target_covered.
  std::function<bool(const RootedTree& t)> done = [](const RootedTree&) { return false; };
};

void require_connected_root(const Graph& g, VertexId root) {
  if (!g.contains(root))
    throw Error(Errc::contract_violation, "root " + std::to_string(root) + " is not in the graph");
  if (!is_connected(g)) throw Error(Errc::disconnected, "graph is not connected");
}

RunTrace run(const Graph& g, VertexId root, const RunOptions& options, const Policy& policy) {
  require_connected_root(g, root);
  FamilyCache families(g, options.kappa_small);
  RunTrace trace;
  trace.root = root;
  RootedTree tree(root);

  for (;;) {
    if (tree.size() == g.vertex_count()) {
      trace.status = RunStatus::spanning;
      break;
    }
    if (policy.done(tree)) {
      trace.status = RunStatus::target_covered;
      break;
    }
    if (options.step_budget && trace.rounds >= *options.step_budget) {
      trace.status = RunStatus::budget_exhausted;
      break;
    }
    const VertexSet current = tree.vertices();
    const RootedTree before = tree;
    for (const VertexSet& d : components(g, current)) {
      if (!policy.wants(d)) continue;
      ExtensionStep step;
      step.step = trace.rounds;
      step.component = d;

      VertexSet nd = neighborhood(g, d, current);
      for (auto a = nd.begin(); a != nd.end(); ++a) {
        for (auto b = std::next(a); b != nd.end(); ++b) {
          const PathFamily* family = families.get(*a, *b);
          if (!family) continue;
          for (std::size_t k = 0; k < family->size(); ++k) {
            const Path& p = family->paths[k];
            bool meets = false;
            for (VertexId x : p)
              if (d.contains(x)) {
                step.targets.insert(x);
                meets = true;
              }
            if (meets) {
              step.selected.push_back({*a, *b, k + 1});
              break;
            }
          }
        }
      }
      VertexSet extra = policy.extra(d);
      step.targets.insert(extra.begin(), extra.end());
      if (step.targets.empty()) {
        step.fallback = true;
        step.targets.insert(*d.begin());
      }
      // Extensions into distinct components of g - T_n do not interact: the
      // other components stay components with the same neighbourhood.
      Extension ext = extend_component(g, tree, d, step.targets);
      step.attach_vertex = ext.attach_vertex;
      step.entry_vertex = ext.entry_vertex;
      step.added = std::move(ext.added);
      tree = std::move(ext.tree);
      trace.steps.push_back(std::move(step));
    }
    ++trace.rounds;
    if (tree.size() == before.size())
      throw Error(Errc::contract_violation, "construction stalled at step " +
                                                std::to_string(trace.rounds - 1));
  }
  trace.final_tree = std::move(tree);
  return trace;
}

}  // namespace

std::string_view to_string(RunStatus status) noexcept {
  switch (status) {
    case RunStatus::spanning: return "spanning";
    case RunStatus::budget_exhausted: return "budget-exhausted";
    case RunStatus::target_covered: return "target-covered";
  }
  return "unknown";
}

RootedTree dfs_nst(const Graph& g, VertexId root) {
  require_connected_root(g, root);
  std::map<VertexId, VertexId> parent;
  VertexSet visited{root};
  // Explicit stack of (vertex, next neighbour position).
  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    auto nbrs = g.neighbors(v);
    while (pos < nbrs.size() && visited.contains(nbrs[pos])) ++pos;
    if (pos == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    VertexId w = nbrs[pos++];
    visited.insert(w);
    parent[w] = v;
    stack.emplace_back(w, 0);
  }
  return RootedTree(root, std::move(parent));
}

RootedTree jung_subtree(const Graph& g, const VertexSet& c, VertexId root) {
  if (!c.contains(root))
    throw Error(Errc::contract_violation,
                "root " + std::to_string(root) + " is not in the vertex set");
  return dfs_nst(induced_subgraph(g, c), root);
}

RootedTree attach(const Graph& g, const RootedTree& t, const VertexSet& c,
                  const RootedTree& subtree) {
  require_component(g, t, c);
  VertexId top = attachment_point(g, t, c);
  for (VertexId v : subtree.vertices())
    if (!c.contains(v))
      throw Error(Errc::contract_violation,
                  "subtree vertex " + std::to_string(v) + " lies outside the component");
  if (!g.adjacent(top, subtree.root()))
    throw Error(Errc::contract_violation, "subtree root " + std::to_string(subtree.root()) +
                                              " is not adjacent to " + std::to_string(top));
  return glue(t, top, subtree);
}

Extension extend_component(const Graph& g, const RootedTree& t, const VertexSet& d,
                           const VertexSet& targets) {
  require_component(g, t, d);
  if (targets.empty()) throw Error(Errc::contract_violation, "empty target set");
  for (VertexId x : targets)
    if (!d.contains(x))
      throw Error(Errc::contract_violation,
                  "target " + std::to_string(x) + " lies outside the component");

  VertexId top = attachment_point(g, t, d);
  VertexId entry = *std::find_if(g.neighbors(top).begin(), g.neighbors(top).end(),
                                 [&](VertexId x) { return d.contains(x); });
  RootedTree full = jung_subtree(g, d, entry);

  VertexSet keep{entry};
  for (VertexId x : targets)
    for (VertexId y : down_closure(full, x)) keep.insert(y);
  std::map<VertexId, VertexId> parent;
  for (VertexId x : keep)
    if (auto p = full.parent(x)) parent[x] = *p;
  RootedTree pruned(entry, std::move(parent));
  return Extension{glue(t, top, pruned), top, entry, keep};
}

RunTrace omega_nst(const Graph& g, VertexId root, const RunOptions& options) {
  return run(g, root, options, Policy{});
}

RunTrace local_normal_tree(const Graph& g, const VertexSet& targets, VertexId root,
                           const RunOptions& options) {
  require_subset(g, targets, "target set");
  Policy policy;
  auto meets = [&targets](const VertexSet& d) {
    return std::any_of(d.begin(), d.end(), [&](VertexId v) { return targets.contains(v); });
  };
  policy.wants = meets;
  policy.extra = [&targets](const VertexSet& d) {
    for (VertexId v : d)
      if (targets.contains(v)) return VertexSet{v};
    return VertexSet{};
  };
  policy.done = [&targets](const RootedTree& t) {
    return std::all_of(targets.begin(), targets.end(), [&](VertexId v) { return t.contains(v); });
  };
  return run(g, root, options, policy);
}

RunTrace nst_from_dispersed_cover(const Graph& g, const DispersedCover& cover, VertexId root,
                                  const RunOptions& options) {
  VertexSet covered;
  for (const VertexSet& part : cover) {
    require_subset(g, part, "cover set");
    covered.insert(part.begin(), part.end());
  }
  if (covered.size() != g.vertex_count())
    throw Error(Errc::contract_violation, "cover does not contain every vertex of the graph");
  Policy policy;
  policy.extra = [&cover](const VertexSet& d) {
    for (const VertexSet& part : cover)
      for (VertexId v : d)
        if (part.contains(v)) return VertexSet{v};
    return VertexSet{};
  };
  return run(g, root, options, policy);
}

RootedTree tree_at_step(const RunTrace& trace, std::size_t n) {
  VertexSet keep{trace.root};
  for (const ExtensionStep& step : trace.steps)
    if (step.step < n) keep.insert(step.added.begin(), step.added.end());
  std::map<VertexId, VertexId> parent;
  for (VertexId v : keep)
    if (auto p = trace.final_tree.parent(v)) parent[v] = *p;
  return RootedTree(trace.root, std::move(parent));
}

DispersedCover levels_of(const RootedTree& t) {
  DispersedCover levels;
  for (VertexId v : t.vertices()) {
    std::size_t d = t.depth(v);
    if (levels.size() <= d) levels.resize(d + 1);
    levels[d].insert(v);
  }
  return levels;
}

}  // namespace ntk
