#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include "ntk/connectivity.hpp"
#include "ntk/fat_tk.hpp"
#include "ntk/graph.hpp"
#include "ntk/nst.hpp"
#include "ntk/tree.hpp"

// Text formats. Readers throw Errc::parse_error on malformed input; every
// writer is deterministic (sorted keys, sorted id lists).
namespace ntk::io {

using VertexLabel = std::function<std::string(VertexId)>;

// {"vertices":[ids...],"edges":[[u,v],...]} with u < v.
Graph read_graph_json(std::string_view text);
std::string write_graph_json(const Graph& g);

// One "u v" edge per line; a line holding a single id declares a vertex.
// Blank lines and '#' comments are ignored.
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Loads JSON for *.json, the edge-list format otherwise.
Graph load_graph(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

std::string graph_to_dot(const Graph& g, const VertexLabel& label = {});

// {"root": id, "parent": {"child": parent, ...}}
RootedTree read_tree_json(std::string_view text);
std::string write_tree_json(const RootedTree& t);

/// Host graph with tree edges solid and the remaining edges dashed.
std::string tree_to_dot(const Graph& g, const RootedTree& t, const VertexLabel& label = {});

std::string report_to_json(const NormalityReport& report);
std::string trace_to_json(const RunTrace& trace);
std::string levels_to_json(const DispersedCover& levels);

// [[ids...], [ids...], ...]
DispersedCover read_cover_json(std::string_view text);

std::string kappa_to_json(const PathFamily& family);
std::string separator_to_json(const Separator& separator);

// {"branch":[ids...],"m":m,"paths":{"i,j":[[ids...],...]}}, i < j indices into branch.
FatTKCertificate read_certificate_json(std::string_view text);
std::string write_certificate_json(const FatTKCertificate& cert);
std::string search_to_json(const FatTKSearch& search, const std::vector<VertexId>& branch);
std::string verify_to_json(const VerifyResult& result);
std::string verdict_to_json(const DispersednessVerdict& verdict);

std::string generators_to_json();

}  // namespace ntk::io
