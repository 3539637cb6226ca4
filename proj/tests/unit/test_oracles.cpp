// Self-checks of the brute-force oracles, plus the library compared with
// them on random instances beyond the acceptance sizes.
#include <doctest.h>

#include <random>

#include "ntk/connectivity.hpp"
#include "ntk/tree.hpp"
#include "small_graph.hpp"

using namespace oracle;

TEST_CASE("graph enumeration matches the known class counts") {
  auto classes = graphs_up_to(7);
  const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  const std::size_t conn[] = {1, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 0; n <= 7; ++n) {
    CHECK(classes[n].size() == all[n]);
    std::size_t c = 0;
    for (const auto& g : classes[n]) c += connected(g);
    CHECK(c == conn[n]);
  }
}

TEST_CASE("canonical codes ignore relabelling") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + round % 9;
    SmallGraph g = random_connected(n, 0.4, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SmallGraph h(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    CHECK(canonical_code(g) == canonical_code(h));
  }
}

TEST_CASE("spanning tree counts") {
  // Cayley: K_n has n^(n-2) spanning trees
  for (int n = 1; n <= 6; ++n) {
    SmallGraph k(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) k.add_edge(a, b);
    std::size_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    CHECK(spanning_trees(k).size() == expected);
  }
  SmallGraph c5(5);
  for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  CHECK(spanning_trees(c5).size() == 5);
}

TEST_CASE("the two normality oracles agree") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 150; ++round) {
    int n = 2 + round % 5;
    SmallGraph g = random_connected(n, 0.4, rng);
    for (const ParentTree& t : all_rooted_subtrees(g)) CHECK(normal_by_paths(g, t) == normal_by_reach(g, t));
  }
}

TEST_CASE("known oracle values") {
  SmallGraph c4(4);
  for (int v = 0; v < 4; ++v) c4.add_edge(v, (v + 1) % 4);
  // path tree 0-1-2-3 is normal; 1 <- 0 -> 3 with 2 outside is not
  CHECK(normal_by_paths(c4, root_tree(4, {{0, 1}, {1, 2}, {2, 3}}, 0, c4.all())));
  CHECK_FALSE(normal_by_paths(c4, root_tree(4, {{0, 1}, {0, 3}}, 0, bit(0) | bit(1) | bit(3))));
  CHECK(kappa_by_paths(c4, 0, 2) == 2);
  CHECK(min_separator_size(c4, bit(0), bit(2)) == 2);
  CHECK(min_separator_size(c4, bit(0), bit(1)) == -1);
}

TEST_CASE("is_normal agrees with T-path enumeration on random graphs up to 9 vertices") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 600; ++round) {
    int n = 2 + round % 8;
    SmallGraph g = random_connected(n, 0.15 + 0.1 * (round % 5), rng);
    ntk::Graph lib = to_graph(g);
    ParentTree t = root_tree(n, random_spanning_tree(g, rng), int(rng() % n), g.all());
    CHECK(ntk::is_normal(lib, to_tree(t)).normal == normal_by_paths(g, t));
    // a random subtree: drop leaves of the spanning tree at random
    ParentTree sub = t;
    for (int drop = int(rng() % n); drop > 0; --drop) {
      std::vector<int> leaves;
      for (int v = 0; v < n; ++v) {
        if (!(sub.members & bit(v)) || v == sub.root) continue;
        bool leaf = true;
        for (int w = 0; w < n; ++w) leaf &= !((sub.members & bit(w)) && sub.parent[w] == v);
        if (leaf) leaves.push_back(v);
      }
      if (leaves.empty()) break;
      int v = leaves[rng() % leaves.size()];
      sub.members &= ~bit(v);
      sub.parent[v] = -1;
    }
    CHECK(ntk::is_normal(lib, to_tree(sub)).normal == normal_by_paths(g, sub));
  }
}
