#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntk/connectivity.hpp"
#include "ntk/graph.hpp"

namespace ntk {

/**
 * Finite fat TK(n, m): n branch vertices, every pair joined by m internally
 * disjoint paths, all paths disjoint apart from shared branch ends.
 *
 * paths[{i, j}] (i < j index into `branch`) holds the m paths of that pair,
 * each running from branch[i] to branch[j].
 */
struct FatTKCertificate {
  std::vector<VertexId> branch;
  std::size_t multiplicity = 1;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> paths;

  /// Every vertex used by the certificate.
  VertexSet vertices() const;
};

struct VerifyResult {
  bool valid = true;
  std::string reason;  // empty when valid

  explicit operator bool() const noexcept { return valid; }
};

VerifyResult verify_fat_tk(const Graph& g, const FatTKCertificate& cert);

struct FatTKFailure {
  std::size_t i;  // indices into the requested branch list
  std::size_t j;
  std::size_t routed;      // paths found for this pair before giving up
  VertexSet separator;     // blocks further paths in the residual graph
};

struct FatTKSearch {
  std::optional<FatTKCertificate> certificate;
  std::optional<FatTKFailure> failure;

  bool found() const noexcept { return certificate.has_value(); }
};

/**
 * Greedy search for a fat TK(|branch|, m) with the given branch vertices.
 *
 * Pairs are routed in lexicographic order by a minimum-cost flow on the
 * graph minus earlier path interiors and the other branch vertices. Sound
 * but not complete: a failure only reports the first pair that could not be
 * routed. Throws Errc::contract_violation for fewer than two branch
 * vertices, m < 1, or vertices missing from g.
 */
FatTKSearch find_fat_tk(const Graph& g, const std::vector<VertexId>& branch, std::size_t m);

/// kappa(u, v) >= m for all branch pairs. False proves no fat TK(n, m) on
/// these branch vertices exists.
bool kappa_necessary_check(const Graph& g, const std::vector<VertexId>& branch, std::size_t m);

struct DispersedExamination {
  FatTKCertificate certificate;
  std::optional<VertexSet> separator;  // nullopt: no separator of size <= s
};

struct DispersednessVerdict {
  bool dispersed = true;
  std::size_t candidates_examined = 0;
  std::vector<DispersedExamination> examined;
};

struct DispersedQuery {
  std::size_t n = 3;
  std::size_t m = 2;
  std::size_t s = 0;
  std::size_t search_budget = 16;
};

/**
 * Minimum set of at most `bound` vertices, disjoint from `probe`, after
 * whose removal no probe vertex reaches a surviving vertex of `structure`.
 * nullopt when no such set exists.
 */
std::optional<VertexSet> separate_from_structure(const Graph& g, const VertexSet& probe,
                                                 const VertexSet& structure, std::size_t bound);

/**
 * Bounded dispersedness check of `probe` against fat TK(n, m) subgraphs.
 *
 * Candidate branch sets pass kappa_necessary_check and are tried in order
 * of descending minimum pairwise kappa (ties lexicographic); at most
 * `search_budget` candidates go through find_fat_tk. Every certificate
 * found must be separable from the probe set by at most s vertices. The
 * verdict is relative to this bounded search.
 */
DispersednessVerdict is_dispersed(const Graph& g, const VertexSet& probe,
                                  const DispersedQuery& query);

}  // namespace ntk
