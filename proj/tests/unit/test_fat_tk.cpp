#include <doctest.h>

#include <random>

#include "ntk/error.hpp"
#include "ntk/fat_tk.hpp"
#include "ntk/generator.hpp"
#include "small_graph.hpp"

using namespace ntk;

namespace {

// Triangle on 0, 1, 2 with every edge replaced by `copies` paths of length 2.
oracle::SmallGraph subdivided_triangle(int copies) {
  oracle::SmallGraph g(3 + 3 * copies);
  int next = 3;
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}})
    for (int c = 0; c < copies; ++c) {
      g.add_edge(a, next);
      g.add_edge(next, b);
      ++next;
    }
  return g;
}

oracle::SmallGraph with_pendant(const oracle::SmallGraph& g, int at) {
  oracle::SmallGraph h(g.n + 1);
  for (int v = 0; v < g.n; ++v) h.adj[v] = g.adj[v];
  h.add_edge(at, g.n);
  return h;
}

oracle::SmallGraph complete(int n) {
  oracle::SmallGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("verify_fat_tk examples") {
  Graph edge = Graph::from_edges({{4, 9}, {9, 11}});
  FatTKCertificate single{{4, 9}, 1, {{{0, 1}, {{4, 9}}}}};
  CHECK(verify_fat_tk(edge, single).valid);

  Graph tri = oracle::to_graph(subdivided_triangle(2));
  FatTKCertificate doubled{{0, 1, 2},
                           2,
                           {{{0, 1}, {{0, 3, 1}, {0, 4, 1}}},
                            {{0, 2}, {{0, 5, 2}, {0, 6, 2}}},
                            {{1, 2}, {{1, 7, 2}, {1, 8, 2}}}}};
  CHECK(verify_fat_tk(tri, doubled).valid);

  FatTKCertificate shared = doubled;
  shared.paths[{0, 1}][1] = {0, 3, 1};
  VerifyResult r = verify_fat_tk(tri, shared);
  CHECK_FALSE(r.valid);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("verify_fat_tk rejects malformed certificates") {
  Graph k5 = oracle::to_graph(complete(5));
  FatTKCertificate good{{0, 1}, 2, {{{0, 1}, {{0, 2, 1}, {0, 3, 1}}}}};
  CHECK(verify_fat_tk(k5, good).valid);

  auto bad = good;
  bad.paths[{0, 1}] = {{0, 1}, {0, 3, 1}};  // direct edge with m = 2
  CHECK_FALSE(verify_fat_tk(k5, bad).valid);

  bad = good;
  bad.paths[{0, 1}].pop_back();  // too few paths
  CHECK_FALSE(verify_fat_tk(k5, bad).valid);

  bad = good;
  bad.branch = {0, 0};
  CHECK_FALSE(verify_fat_tk(k5, bad).valid);

  bad = good;
  bad.paths[{0, 1}][0] = {1, 2, 0};  // wrong direction
  CHECK_FALSE(verify_fat_tk(k5, bad).valid);

  bad = good;
  bad.paths[{0, 1}][0] = {0, 9, 1};  // not in the graph
  CHECK_FALSE(verify_fat_tk(k5, bad).valid);

  FatTKCertificate through{{0, 1, 2}, 1,
                           {{{0, 1}, {{0, 2, 1}}}, {{0, 2}, {{0, 2}}}, {{1, 2}, {{1, 2}}}}};
  CHECK_FALSE(verify_fat_tk(k5, through).valid);  // interior is a branch vertex
}

TEST_CASE("find_fat_tk examples") {
  SUBCASE("doubled triangle") {
    oracle::SmallGraph sg = subdivided_triangle(2);
    Graph g = oracle::to_graph(sg);
    FatTKSearch s = find_fat_tk(g, {0, 1, 2}, 2);
    REQUIRE(s.found());
    CHECK(verify_fat_tk(g, *s.certificate).valid);
    CHECK(oracle::fat_tk_exists(sg, {0, 1, 2}, 2));
  }
  SUBCASE("trees have no fat TK(n, 2)") {
    Graph tree = Graph::from_edges({{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    FatTKSearch s = find_fat_tk(tree, {0, 2, 4}, 2);
    CHECK_FALSE(s.found());
    REQUIRE(s.failure);
    CHECK(s.failure->i == 0);
    CHECK(s.failure->j == 1);
  }
  SUBCASE("complete graphs need six spare vertices for fat TK(3, 2)") {
    // every one of the six branch paths needs its own interior vertex
    oracle::SmallGraph k7 = complete(7);
    CHECK_FALSE(oracle::fat_tk_exists(k7, {0, 1, 2}, 2));
    CHECK_FALSE(find_fat_tk(oracle::to_graph(k7), {0, 1, 2}, 2).found());
    CHECK(oracle::fat_tk_exists(k7, {0, 1, 2}, 1));
    oracle::SmallGraph k9 = complete(9);
    Graph g = oracle::to_graph(k9);
    CHECK(oracle::fat_tk_exists(k9, {0, 1, 2}, 2));
    for (std::vector<VertexId> branch : {std::vector<VertexId>{0, 1, 2}, {2, 4, 6}, {1, 5, 8}}) {
      FatTKSearch s = find_fat_tk(g, branch, 2);
      REQUIRE(s.found());
      CHECK(verify_fat_tk(g, *s.certificate).valid);
    }
  }
  SUBCASE("argument checks") {
    Graph g = oracle::to_graph(complete(4));
    CHECK_THROWS_AS(find_fat_tk(g, {0}, 2), Error);
    CHECK_THROWS_AS(find_fat_tk(g, {0, 1}, 0), Error);
    CHECK_THROWS_AS(find_fat_tk(g, {0, 9}, 1), Error);
  }
}

TEST_CASE("failure reports carry a blocking separator") {
  oracle::SmallGraph sg = subdivided_triangle(2);
  Graph g = oracle::to_graph(sg);
  FatTKSearch s = find_fat_tk(g, {0, 1, 2}, 3);
  CHECK_FALSE(s.found());
  REQUIRE(s.failure);
  CHECK(s.failure->routed < 3);
  // the separator blocks the pair once the third branch vertex is removed
  VertexSet removed = s.failure->separator;
  removed.insert(2);
  CHECK_FALSE(connected_between(g, {0}, {1}, removed));
  CHECK_FALSE(oracle::fat_tk_exists(sg, {0, 1, 2}, 3));
}

TEST_CASE("kappa_necessary_check examples") {
  CHECK(kappa_necessary_check(oracle::to_graph(complete(4)), {0, 1, 2}, 3));
  Graph path = Graph::from_edges({{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(kappa_necessary_check(path, {0, 3}, 2));
  oracle::SmallGraph tri = subdivided_triangle(2);
  Graph g = oracle::to_graph(tri);
  // two direct paths per pair plus one around the third branch vertex
  CHECK(oracle::kappa_by_paths(tri, 0, 1) == 3);
  CHECK(kappa(g, 0, 1) == 3);
  CHECK(kappa_necessary_check(g, {0, 1, 2}, 3));
  CHECK_FALSE(kappa_necessary_check(g, {0, 1, 2}, 4));
  CHECK_FALSE(find_fat_tk(g, {0, 1, 2}, 3).found());
}

TEST_CASE("certificates are fragile under interior deletion") {
  oracle::SmallGraph sg = complete(9);
  Graph g = oracle::to_graph(sg);
  FatTKSearch s = find_fat_tk(g, {0, 1, 2}, 2);
  REQUIRE(s.found());
  for (const auto& [key, family] : s.certificate->paths)
    for (const Path& p : family)
      for (std::size_t k = 1; k + 1 < p.size(); ++k) {
        VertexSet keep = g.vertex_set();
        keep.erase(p[k]);
        CHECK_FALSE(verify_fat_tk(induced_subgraph(g, keep), *s.certificate).valid);
      }
}

TEST_CASE("greedy search is sound against brute force") {
  std::mt19937_64 rng(61);
  int found = 0;
  for (int round = 0; round < 150; ++round) {
    int n = 9 + round % 3;
    oracle::SmallGraph sg = oracle::random_connected(n, 0.3 + 0.1 * (round % 4), rng);
    Graph g = oracle::to_graph(sg);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> branch(perm.begin(), perm.begin() + 3);
    std::vector<VertexId> ids(branch.begin(), branch.end());
    bool exists = oracle::fat_tk_exists(sg, branch, 2);
    FatTKSearch s = find_fat_tk(g, ids, 2);
    if (s.found()) {
      ++found;
      CHECK(exists);
      CHECK(verify_fat_tk(g, *s.certificate).valid);
    }
    if (exists) CHECK(kappa_necessary_check(g, ids, 2));
    if (!kappa_necessary_check(g, ids, 2)) CHECK_FALSE(s.found());
  }
  CHECK(found > 0);
}

TEST_CASE("separate_from_structure") {
  oracle::SmallGraph sg = with_pendant(subdivided_triangle(2), 0);
  Graph g = oracle::to_graph(sg);
  VertexSet structure = g.vertex_set();
  structure.erase(9);
  CHECK(separate_from_structure(g, {9}, structure, 1) == VertexSet{0});
  CHECK(separate_from_structure(g, {9}, structure, 0) == std::nullopt);
  CHECK(separate_from_structure(g, {0}, structure, 5) == std::nullopt);
}

TEST_CASE("is_dispersed examples") {
  SUBCASE("trees are dispersed") {
    Graph tree = Graph::from_edges({{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
    DispersednessVerdict v = is_dispersed(tree, {2}, {.n = 3, .m = 2, .s = 0, .search_budget = 16});
    CHECK(v.dispersed);
    CHECK(v.examined.empty());
  }
  SUBCASE("pendant vertex behind a cut vertex") {
    oracle::SmallGraph sg = with_pendant(subdivided_triangle(2), 0);
    Graph g = oracle::to_graph(sg);
    DispersednessVerdict v = is_dispersed(g, {9}, {.n = 3, .m = 2, .s = 1, .search_budget = 16});
    CHECK(v.dispersed);
    REQUIRE_FALSE(v.examined.empty());
    for (const auto& ex : v.examined) {
      CHECK(verify_fat_tk(g, ex.certificate).valid);
      CHECK(ex.certificate.branch == std::vector<VertexId>{0, 1, 2});
      REQUIRE(ex.separator);
      CHECK(*ex.separator == VertexSet{0});
    }
  }
  SUBCASE("probe on a branch vertex") {
    Graph g = oracle::to_graph(subdivided_triangle(2));
    DispersednessVerdict v = is_dispersed(g, {0}, {.n = 3, .m = 2, .s = 0, .search_budget = 16});
    CHECK_FALSE(v.dispersed);
    bool unseparated = false;
    for (const auto& ex : v.examined) unseparated |= !ex.separator.has_value();
    CHECK(unseparated);
  }
  SUBCASE("zero budget") {
    Graph g = oracle::to_graph(complete(4));
    CHECK_THROWS_AS(is_dispersed(g, {0}, {.n = 3, .m = 2, .s = 0, .search_budget = 0}), Error);
  }
}

TEST_CASE("fat-tk-gen truncations contain their core") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t m = 1; m <= 3; ++m) {
      Graph g = make_generator("fat-tk-gen", {n, m}).truncate(m + 2);
      std::vector<VertexId> branch;
      for (VertexId b = 0; b < n; ++b) branch.push_back(b);
      FatTKSearch s = find_fat_tk(g, branch, m);
      REQUIRE(s.found());
      CHECK(verify_fat_tk(g, *s.certificate).valid);
    }
}
