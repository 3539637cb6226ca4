#include "ntk/fat_tk.hpp"

#include <algorithm>
#include <string>

#include "flow.hpp"

namespace ntk {

namespace {

// Hard cap on enumerated candidate branch sets in is_dispersed.
constexpr std::size_t kMaxCandidates = 200000;

void require_branch_set(const Graph& g, const std::vector<VertexId>& branch) {
  if (branch.size() < 2)
    throw Error(Errc::contract_violation, "at least two branch vertices are required");
  VertexSet distinct(branch.begin(), branch.end());
  if (distinct.size() != branch.size())
    throw Error(Errc::contract_violation, "branch vertices must be distinct");
  require_subset(g, distinct, "branch set");
}

std::string pair_name(std::size_t i, std::size_t j) {
  return std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

VertexSet FatTKCertificate::vertices() const {
  VertexSet out(branch.begin(), branch.end());
  for (const auto& [key, family] : paths)
    for (const Path& p : family) out.insert(p.begin(), p.end());
  return out;
}

VerifyResult verify_fat_tk(const Graph& g, const FatTKCertificate& cert) {
  auto fail = [](std::string reason) { return VerifyResult{false, std::move(reason)}; };
  const std::size_t n = cert.branch.size();
  const std::size_t m = cert.multiplicity;
  if (n < 2) return fail("fewer than two branch vertices");
  if (m < 1) return fail("multiplicity must be at least 1");
  VertexSet branch;
  for (VertexId b : cert.branch) {
    if (!g.contains(b)) return fail("branch vertex " + std::to_string(b) + " is not in the graph");
    if (!branch.insert(b).second) return fail("branch vertex " + std::to_string(b) + " repeated");
  }
  if (cert.paths.size() != n * (n - 1) / 2) return fail("wrong number of branch pairs");

  VertexSet interiors;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto it = cert.paths.find({i, j});
      if (it == cert.paths.end()) return fail("pair " + pair_name(i, j) + " has no paths");
      const std::vector<Path>& family = it->second;
      if (family.size() != m)
        return fail("pair " + pair_name(i, j) + " has " + std::to_string(family.size()) +
                    " paths, expected " + std::to_string(m));
      for (const Path& p : family) {
        if (!is_path_in(g, p)) return fail("pair " + pair_name(i, j) + " has an invalid path");
        if (p.size() < 2 || p.front() != cert.branch[i] || p.back() != cert.branch[j])
          return fail("pair " + pair_name(i, j) + " has a path with wrong ends");
        if (m >= 2 && p.size() < 3)
          return fail("pair " + pair_name(i, j) + " uses an unsubdivided edge with m >= 2");
        for (std::size_t k = 1; k + 1 < p.size(); ++k) {
          if (branch.contains(p[k]))
            return fail("path of pair " + pair_name(i, j) + " passes branch vertex " +
                        std::to_string(p[k]));
          if (!interiors.insert(p[k]).second)
            return fail("interior vertex " + std::to_string(p[k]) + " is shared by two paths");
        }
      }
    }
  }
  return {};
}

FatTKSearch find_fat_tk(const Graph& g, const std::vector<VertexId>& branch, std::size_t m) {
  require_branch_set(g, branch);
  if (m < 1) throw Error(Errc::contract_violation, "multiplicity must be at least 1");

  FatTKCertificate cert{branch, m, {}};
  VertexSet used;
  for (std::size_t i = 0; i < branch.size(); ++i) {
    for (std::size_t j = i + 1; j < branch.size(); ++j) {
      detail::SplitOptions options;
      options.blocked = used;
      for (VertexId b : branch)
        if (b != branch[i] && b != branch[j]) options.blocked.insert(b);
      if (m >= 2) options.skipped_edges.push_back({branch[i], branch[j]});
      options.unit_costs = true;
      detail::SplitNetwork net(g, {branch[i]}, {branch[j]}, options);
      const int limit = static_cast<int>(std::min<std::size_t>(m, g.vertex_count() + 1));
      const auto routed = static_cast<std::size_t>(net.min_cost_flow(limit));
      if (routed < m) return FatTKSearch{std::nullopt, FatTKFailure{i, j, routed, net.min_cut()}};

      std::vector<Path> family = net.paths();
      std::sort(family.begin(), family.end());
      for (const Path& p : family)
        for (std::size_t k = 1; k + 1 < p.size(); ++k) used.insert(p[k]);
      cert.paths[{i, j}] = std::move(family);
    }
  }
  return FatTKSearch{std::move(cert), std::nullopt};
}

bool kappa_necessary_check(const Graph& g, const std::vector<VertexId>& branch, std::size_t m) {
  require_branch_set(g, branch);
  for (std::size_t i = 0; i < branch.size(); ++i)
    for (std::size_t j = i + 1; j < branch.size(); ++j)
      if (kappa(g, branch[i], branch[j]) < m) return false;
  return true;
}

std::optional<VertexSet> separate_from_structure(const Graph& g, const VertexSet& probe,
                                                 const VertexSet& structure, std::size_t bound) {
  require_subset(g, probe, "probe set");
  require_subset(g, structure, "structure");
  for (VertexId v : probe)
    if (structure.contains(v)) return std::nullopt;
  detail::SplitOptions options;
  options.cuttable_sinks = true;
  detail::SplitNetwork net(g, probe, structure, options);
  const int limit = static_cast<int>(std::min<std::size_t>(bound, g.vertex_count())) + 1;
  if (static_cast<std::size_t>(net.max_flow(limit)) > bound) return std::nullopt;
  return net.min_cut();
}

DispersednessVerdict is_dispersed(const Graph& g, const VertexSet& probe,
                                  const DispersedQuery& query) {
  require_subset(g, probe, "probe set");
  if (query.n < 2) throw Error(Errc::contract_violation, "n must be at least 2");
  if (query.m < 1) throw Error(Errc::contract_violation, "m must be at least 1");
  if (query.search_budget == 0) throw Error(Errc::contract_violation, "search budget is 0");

  // kappa(u, v) <= min(deg u, deg v), so low-degree vertices never qualify.
  std::vector<VertexId> eligible;
  for (VertexId v : g.vertices())
    if (g.degree(v) >= query.m) eligible.push_back(v);
  const std::size_t k = eligible.size();
  std::vector<std::vector<std::size_t>> pair_kappa(k, std::vector<std::size_t>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      pair_kappa[a][b] = pair_kappa[b][a] = kappa(g, eligible[a], eligible[b]);

  struct Candidate {
    std::size_t score;
    std::vector<VertexId> branch;
  };
  std::vector<Candidate> candidates;
  std::vector<std::size_t> chosen;
  // Lexicographic enumeration of n-cliques in the "kappa >= m" graph.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (candidates.size() >= kMaxCandidates) return;
    if (chosen.size() == query.n) {
      Candidate c{SIZE_MAX, {}};
      for (std::size_t x = 0; x < chosen.size(); ++x) {
        c.branch.push_back(eligible[chosen[x]]);
        for (std::size_t y = x + 1; y < chosen.size(); ++y)
          c.score = std::min(c.score, pair_kappa[chosen[x]][chosen[y]]);
      }
      candidates.push_back(std::move(c));
      return;
    }
    for (std::size_t next = from; next < k; ++next) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t x) {
        return pair_kappa[x][next] >= query.m;
      });
      if (!ok) continue;
      chosen.push_back(next);
      self(self, next + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.score > b.score; });

  DispersednessVerdict verdict;
  for (const Candidate& c : candidates) {
    if (verdict.candidates_examined == query.search_budget) break;
    ++verdict.candidates_examined;
    FatTKSearch search = find_fat_tk(g, c.branch, query.m);
    if (!search.found()) continue;
    DispersedExamination exam{std::move(*search.certificate), std::nullopt};
    exam.separator = separate_from_structure(g, probe, exam.certificate.vertices(), query.s);
    if (!exam.separator) verdict.dispersed = false;
    verdict.examined.push_back(std::move(exam));
  }
  return verdict;
}

}  // namespace ntk
