#include "ntk/generator.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <unordered_map>

namespace ntk {

namespace {

constexpr VertexId kMaxId = std::numeric_limits<VertexId>::max();

[[noreturn]] void overflow(const char* generator) {
  throw Error(Errc::generator_failure, std::string(generator) + ": vertex id overflow");
}

GraphGenerator make_ray() {
  return GraphGenerator("ray", 0, [](VertexId v) {
    std::vector<VertexId> out;
    if (v > 0) out.push_back(v - 1);
    if (v == kMaxId) overflow("ray");
    out.push_back(v + 1);
    return out;
  });
}

GraphGenerator make_double_ray() {
  return GraphGenerator(
      "double-ray", double_ray_id(0),
      [](VertexId v) {
        std::int64_t p = double_ray_position(v);
        return std::vector<VertexId>{double_ray_id(p - 1), double_ray_id(p + 1)};
      },
      [](VertexId v) { return std::to_string(double_ray_position(v)); });
}

GraphGenerator make_binary_tree() {
  return GraphGenerator("binary-tree", 0, [](VertexId v) {
    std::vector<VertexId> out;
    if (v > 0) out.push_back((v - 1) / 2);
    if (v > (kMaxId - 2) / 2) overflow("binary-tree");
    out.push_back(2 * v + 1);
    out.push_back(2 * v + 2);
    return out;
  });
}

GraphGenerator make_grid() {
  return GraphGenerator(
      "grid", grid_id(0, 0),
      [](VertexId v) {
        auto [x, y] = grid_coordinates(v);
        std::vector<VertexId> out;
        if (x > 0) out.push_back(grid_id(x - 1, y));
        if (y > 0) out.push_back(grid_id(x, y - 1));
        out.push_back(grid_id(x + 1, y));
        out.push_back(grid_id(x, y + 1));
        return out;
      },
      [](VertexId v) {
        auto [x, y] = grid_coordinates(v);
        return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      });
}

// Fat TK(n, m) core plus one ray hanging off every branch vertex. Branch
// vertices are 0..n-1; the i-j pair gets m paths of lengths 2, 3, ..., m+1.
struct FatTkLayout {
  std::size_t n = 0;
  std::size_t m = 0;
  VertexId ray_base = 0;
  std::unordered_map<VertexId, std::vector<VertexId>> core;
  std::unordered_map<VertexId, std::string> labels;
};

GraphGenerator make_fat_tk(const GeneratorParams& params) {
  if (params.n < 2 || params.m < 1)
    throw Error(Errc::invalid_argument, "fat-tk-gen needs n >= 2 and m >= 1");
  auto layout = std::make_shared<FatTkLayout>();
  layout->n = params.n;
  layout->m = params.m;
  VertexId next = params.n;
  auto link = [&](VertexId a, VertexId b) {
    layout->core[a].push_back(b);
    layout->core[b].push_back(a);
  };
  for (std::size_t b = 0; b < params.n; ++b) layout->labels[b] = "b" + std::to_string(b);
  for (std::size_t i = 0; i < params.n; ++i) {
    for (std::size_t j = i + 1; j < params.n; ++j) {
      for (std::size_t c = 0; c < params.m; ++c) {
        VertexId prev = i;
        for (std::size_t k = 0; k <= c; ++k) {
          VertexId s = next++;
          layout->labels[s] = "s" + std::to_string(i) + "." + std::to_string(j) + "." +
                              std::to_string(c) + "." + std::to_string(k);
          link(prev, s);
          prev = s;
        }
        link(prev, j);
      }
    }
  }
  layout->ray_base = next;

  auto rule = [layout](VertexId v) {
    const std::size_t n = layout->n;
    std::vector<VertexId> out;
    if (v < layout->ray_base) {
      if (auto it = layout->core.find(v); it != layout->core.end()) out = it->second;
      if (v < n) out.push_back(layout->ray_base + v);
    } else {
      VertexId offset = v - layout->ray_base;
      VertexId branch = offset % n;
      out.push_back(offset < n ? branch : v - n);
      if (v > kMaxId - n) overflow("fat-tk-gen");
      out.push_back(v + n);
    }
    return out;
  };
  auto label = [layout](VertexId v) {
    if (v < layout->ray_base) return layout->labels.at(v);
    VertexId offset = v - layout->ray_base;
    return "r" + std::to_string(offset % layout->n) + "." + std::to_string(offset / layout->n + 1);
  };
  return GraphGenerator("fat-tk-gen", 0, rule, label);
}

}  // namespace

GraphGenerator::GraphGenerator(std::string name, VertexId root, NeighborRule rule,
                               LabelRule label)
    : name_(std::move(name)), root_(root), rule_(std::move(rule)), label_(std::move(label)) {}

std::string GraphGenerator::label(VertexId v) const {
  return label_ ? label_(v) : std::to_string(v);
}

Graph GraphGenerator::truncate(std::size_t radius) const {
  std::map<VertexId, std::vector<VertexId>> ball;  // vertex -> sorted rule output
  auto expand = [&](VertexId v) -> const std::vector<VertexId>& {
    auto it = ball.find(v);
    if (it->second.empty()) {
      std::vector<VertexId> nbrs = rule_(v);
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      if (std::binary_search(nbrs.begin(), nbrs.end(), v))
        throw Error(Errc::generator_failure, name_ + ": self-loop at " + label(v));
      it->second = std::move(nbrs);
    }
    return it->second;
  };

  ball[root_];
  std::deque<std::pair<VertexId, std::size_t>> queue{{root_, 0}};
  while (!queue.empty()) {
    auto [v, dist] = queue.front();
    queue.pop_front();
    if (dist == radius) continue;
    for (VertexId w : expand(v)) {
      if (ball.contains(w)) continue;
      ball[w];
      queue.emplace_back(w, dist + 1);
    }
  }

  std::vector<Edge> edges;
  std::vector<VertexId> ids;
  for (const auto& [v, unused] : ball) ids.push_back(v);
  for (VertexId v : ids) {
    for (VertexId w : expand(v)) {
      if (!ball.contains(w)) continue;
      const auto& back = expand(w);
      if (!std::binary_search(back.begin(), back.end(), v))
        throw Error(Errc::generator_failure,
                    name_ + ": asymmetric rule between " + label(v) + " and " + label(w));
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph(std::move(ids), edges);
}

const std::vector<GeneratorInfo>& builtin_generators() {
  static const std::vector<GeneratorInfo> infos = {
      {"ray", "one-way infinite path 0-1-2-..., rooted at 0"},
      {"double-ray", "two-way infinite path; ids zig-zag encode signed positions, root is position 0"},
      {"binary-tree", "infinite rooted binary tree in heap numbering, root 0"},
      {"grid", "quarter grid on N x N; ids are Cantor pairs of (x, y), root (0, 0)"},
      {"fat-tk-gen", "fat TK(n, m) with branch vertices 0..n-1 and an infinite ray at each branch vertex"},
  };
  return infos;
}

GraphGenerator make_generator(std::string_view name, const GeneratorParams& params) {
  if (name == "ray") return make_ray();
  if (name == "double-ray") return make_double_ray();
  if (name == "binary-tree") return make_binary_tree();
  if (name == "grid") return make_grid();
  if (name == "fat-tk-gen") return make_fat_tk(params);
  throw Error(Errc::invalid_argument, "unknown generator '" + std::string(name) + "'");
}

Graph random_connected_graph(std::size_t n, double density, std::uint64_t seed) {
  if (density < 0.0 || density > 1.0)
    throw Error(Errc::invalid_argument, "density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  std::set<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.insert({rng() % i, i});
  std::bernoulli_distribution extra(density);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (extra(rng)) edges.insert({i, j});
  return Graph(std::move(ids), std::vector<Edge>(edges.begin(), edges.end()));
}

VertexId double_ray_id(std::int64_t position) {
  return position >= 0 ? static_cast<VertexId>(position) * 2
                       : static_cast<VertexId>(-(position + 1)) * 2 + 1;
}

std::int64_t double_ray_position(VertexId id) {
  auto half = static_cast<std::int64_t>(id / 2);
  return id % 2 == 0 ? half : -half - 1;
}

VertexId grid_id(std::uint64_t x, std::uint64_t y) {
  std::uint64_t s = x + y;
  if (s < x || s >= (std::uint64_t{1} << 31)) overflow("grid");
  return s * (s + 1) / 2 + y;
}

std::pair<std::uint64_t, std::uint64_t> grid_coordinates(VertexId id) {
  // Largest diagonal s with s(s+1)/2 <= id.
  std::uint64_t lo = 0;
  std::uint64_t hi = std::uint64_t{1} << 32;
  while (lo + 1 < hi) {
    std::uint64_t mid = (lo + hi) / 2;
    if (mid * (mid + 1) / 2 <= id) lo = mid; else hi = mid;
  }
  std::uint64_t y = id - lo * (lo + 1) / 2;
  return {lo - y, y};
}

}  // namespace ntk
