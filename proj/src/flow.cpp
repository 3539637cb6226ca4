#include "flow.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ntk::detail {

namespace {
constexpr std::size_t npos = static_cast<std::size_t>(-1);
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, int capacity, int cost) {
  std::size_t id = arcs_.size();
  arcs_.push_back({to, capacity, cost, 0});
  arcs_.push_back({from, 0, -cost, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

void FlowNetwork::push(std::size_t arc, int amount) {
  arcs_[arc].flow += amount;
  arcs_[arc ^ 1].flow -= amount;
}

int FlowNetwork::max_flow(std::size_t source, std::size_t sink, int limit) {
  int total = 0;
  std::vector<std::size_t> via(out_.size());
  while (total < limit) {
    std::fill(via.begin(), via.end(), npos);
    std::deque<std::size_t> queue{source};
    std::vector<char> seen(out_.size(), 0);
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t a : out_[x]) {
        std::size_t y = arcs_[a].to;
        if (seen[y] || residual(a) <= 0) continue;
        seen[y] = 1;
        via[y] = a;
        queue.push_back(y);
      }
    }
    if (!seen[sink]) break;
    int amount = limit - total;
    for (std::size_t y = sink; y != source; y = arcs_[via[y] ^ 1].to)
      amount = std::min(amount, residual(via[y]));
    for (std::size_t y = sink; y != source; y = arcs_[via[y] ^ 1].to) push(via[y], amount);
    total += amount;
  }
  return total;
}

int FlowNetwork::min_cost_flow(std::size_t source, std::size_t sink, int limit) {
  int total = 0;
  std::vector<long long> dist(out_.size());
  std::vector<std::size_t> via(out_.size());
  std::vector<char> queued(out_.size());
  while (total < limit) {
    // Bellman-Ford queue variant; residual costs may be negative.
    constexpr long long kUnreached = std::numeric_limits<long long>::max();
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(via.begin(), via.end(), npos);
    std::fill(queued.begin(), queued.end(), 0);
    dist[source] = 0;
    std::deque<std::size_t> queue{source};
    queued[source] = 1;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      queued[x] = 0;
      for (std::size_t a : out_[x]) {
        if (residual(a) <= 0) continue;
        std::size_t y = arcs_[a].to;
        long long candidate = dist[x] + arcs_[a].cost;
        if (candidate < dist[y]) {
          dist[y] = candidate;
          via[y] = a;
          if (!queued[y]) {
            queued[y] = 1;
            queue.push_back(y);
          }
        }
      }
    }
    if (dist[sink] == kUnreached) break;
    int amount = limit - total;
    for (std::size_t y = sink; y != source; y = arcs_[via[y] ^ 1].to)
      amount = std::min(amount, residual(via[y]));
    for (std::size_t y = sink; y != source; y = arcs_[via[y] ^ 1].to) push(via[y], amount);
    total += amount;
  }
  return total;
}

std::vector<char> FlowNetwork::residual_reachable(std::size_t source) const {
  std::vector<char> seen(out_.size(), 0);
  std::deque<std::size_t> queue{source};
  seen[source] = 1;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t a : out_[x]) {
      std::size_t y = arcs_[a].to;
      if (seen[y] || residual(a) <= 0) continue;
      seen[y] = 1;
      queue.push_back(y);
    }
  }
  return seen;
}

SplitNetwork::SplitNetwork(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                           const SplitOptions& options)
    : g_(g),
      net_(2 * g.vertex_count() + 2),
      source_(2 * g.vertex_count()),
      sink_(2 * g.vertex_count() + 1),
      vertex_arc_(g.vertex_count(), npos),
      is_source_(g.vertex_count(), 0),
      is_sink_(g.vertex_count(), 0) {
  require_subset(g, sources, "source set");
  require_subset(g, sinks, "sink set");
  require_subset(g, options.blocked, "blocked set");
  std::vector<char> blocked(g.vertex_count(), 0);
  for (VertexId v : options.blocked) blocked[g.index_of(v)] = 1;
  for (VertexId v : sources) is_source_[g.index_of(v)] = 1;
  for (VertexId v : sinks) is_sink_[g.index_of(v)] = 1;

  auto uncapacitated = [&](std::size_t i) {
    return is_source_[i] || (is_sink_[i] && !options.cuttable_sinks);
  };
  const auto& ids = g.vertices();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (blocked[i]) continue;
    vertex_arc_[i] = net_.add_arc(in(i), out(i), uncapacitated(i) ? FlowNetwork::kInfinite : 1);
    if (is_source_[i]) net_.add_arc(source_, in(i), FlowNetwork::kInfinite);
  }
  std::vector<Edge> skipped = options.skipped_edges;
  for (Edge& e : skipped)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(skipped.begin(), skipped.end());
  const int cost = options.unit_costs ? 1 : 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (blocked[i]) continue;
    for (VertexId w : g.neighbors(ids[i])) {
      std::size_t j = g.index_of(w);
      if (blocked[j]) continue;
      Edge e{std::min(ids[i], w), std::max(ids[i], w)};
      if (std::binary_search(skipped.begin(), skipped.end(), e)) continue;
      // Between two uncapacitated vertices the edge itself is the bottleneck.
      int cap = uncapacitated(i) && uncapacitated(j) ? 1 : FlowNetwork::kInfinite;
      net_.add_arc(out(i), in(j), cap, cost);
    }
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (is_sink_[i] && !blocked[i]) net_.add_arc(out(i), sink_, FlowNetwork::kInfinite);
}

int SplitNetwork::max_flow(int limit) { return net_.max_flow(source_, sink_, limit); }

int SplitNetwork::min_cost_flow(int limit) { return net_.min_cost_flow(source_, sink_, limit); }

std::vector<std::vector<VertexId>> SplitNetwork::paths() const {
  // Remaining flow per forward arc, consumed as paths are peeled off.
  std::vector<int> left;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t x = 0; x < net_.node_count(); ++x)
    for (std::size_t a : net_.arcs_from(x))
      if (net_.is_forward(a) && net_.arc_flow(a) > 0) {
        slot[a] = left.size();
        left.push_back(net_.arc_flow(a));
      }

  std::vector<std::vector<VertexId>> out;
  for (;;) {
    std::vector<std::size_t> nodes{source_};
    std::vector<std::size_t> used;
    bool stuck = false;
    while (nodes.back() != sink_) {
      std::size_t x = nodes.back();
      std::size_t next_arc = npos;
      for (std::size_t a : net_.arcs_from(x)) {
        auto it = slot.find(a);
        if (it != slot.end() && left[it->second] > 0) {
          next_arc = a;
          break;
        }
      }
      if (next_arc == npos) {
        stuck = true;
        break;
      }
      std::size_t y = net_.arc_head(next_arc);
      auto seen = std::find(nodes.begin(), nodes.end(), y);
      if (seen != nodes.end()) {
        // Flow cycle: cancel it and continue from its start.
        std::size_t start = static_cast<std::size_t>(seen - nodes.begin());
        --left[slot.at(next_arc)];
        for (std::size_t k = start; k < used.size(); ++k) --left[slot.at(used[k])];
        nodes.resize(start + 1);
        used.resize(start);
        continue;
      }
      nodes.push_back(y);
      used.push_back(next_arc);
    }
    if (stuck) break;
    for (std::size_t a : used) --left[slot.at(a)];
    std::vector<VertexId> path;
    for (std::size_t node : nodes) {
      if (node == source_ || node == sink_) continue;
      VertexId v = g_.vertices()[node / 2];
      if (path.empty() || path.back() != v) path.push_back(v);
    }
    out.push_back(std::move(path));
  }
  return out;
}

VertexSet SplitNetwork::min_cut() const {
  std::vector<char> reach = net_.residual_reachable(source_);
  VertexSet cut;
  const auto& ids = g_.vertices();
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (vertex_arc_[i] != npos && reach[in(i)] && !reach[out(i)]) cut.insert(ids[i]);
  return cut;
}

}  // namespace ntk::detail
