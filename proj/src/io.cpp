#include "ntk/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ntk/generator.hpp"

namespace ntk::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::parse_error, what); }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
}

VertexId as_id(const json& j, const char* what) {
  if (!j.is_number_unsigned()) parse_fail(std::string(what) + " must be a non-negative integer");
  return j.get<VertexId>();
}

VertexId id_from_key(const std::string& key) {
  VertexId v = 0;
  auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (ec != std::errc() || end != key.data() + key.size())
    parse_fail("'" + key + "' is not a vertex id");
  return v;
}

json ids(const VertexSet& s) { return json(std::vector<VertexId>(s.begin(), s.end())); }

VertexSet id_set(const json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  VertexSet out;
  for (const json& x : j) out.insert(as_id(x, what));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json tree_json(const RootedTree& t) {
  json parent = json::object();
  for (const auto& [child, par] : t.parent_map()) parent[std::to_string(child)] = par;
  return {{"root", t.root()}, {"parent", parent}};
}

json certificate_json(const FatTKCertificate& cert) {
  json paths = json::object();
  for (const auto& [key, family] : cert.paths)
    paths[std::to_string(key.first) + "," + std::to_string(key.second)] = family;
  return {{"branch", cert.branch}, {"m", cert.multiplicity}, {"paths", paths}};
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Graph read_graph_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    parse_fail("graph JSON needs \"vertices\" and \"edges\"");
  std::vector<VertexId> vertices;
  for (const json& v : j.at("vertices")) vertices.push_back(as_id(v, "vertex id"));
  std::vector<Edge> edges;
  if (!j.at("edges").is_array()) parse_fail("\"edges\" must be an array");
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) parse_fail("every edge must be a pair [u, v]");
    VertexId u = as_id(e[0], "edge end");
    VertexId v = as_id(e[1], "edge end");
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  try {
    return Graph(std::move(vertices), edges);
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

std::string write_graph_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return dump({{"vertices", g.vertices()}, {"edges", edges}});
}

Graph read_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<VertexId> lone;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) parse_fail("line " + std::to_string(lineno) + ": expected \"u v\"");
    std::vector<VertexId> ends;
    for (const auto& tok : tokens) {
      VertexId v = 0;
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || end != tok.data() + tok.size())
        parse_fail("line " + std::to_string(lineno) + ": '" + tok + "' is not a vertex id");
      ends.push_back(v);
    }
    if (ends.size() == 1)
      lone.push_back(ends[0]);
    else
      edges.push_back({std::min(ends[0], ends[1]), std::max(ends[0], ends[1])});
  }
  try {
    return Graph::from_edges(edges, lone);
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  for (VertexId v : g.vertices())
    if (g.degree(v) == 0) out << v << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::filesystem::path& path) {
  std::string text = read_file(path);
  return path.extension() == ".json" ? read_graph_json(text) : read_edge_list(text);
}

std::string graph_to_dot(const Graph& g, const VertexLabel& label) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v;
    if (label) out << " [label=" << quoted(label(v)) << "]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

RootedTree read_tree_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("root")) parse_fail("tree JSON needs \"root\"");
  VertexId root = as_id(j.at("root"), "root");
  std::map<VertexId, VertexId> parent;
  if (j.contains("parent")) {
    if (!j.at("parent").is_object()) parse_fail("\"parent\" must be an object");
    for (const auto& [key, value] : j.at("parent").items())
      parent[id_from_key(key)] = as_id(value, "parent");
  }
  try {
    return RootedTree(root, std::move(parent));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

std::string write_tree_json(const RootedTree& t) { return dump(tree_json(t)); }

std::string tree_to_dot(const Graph& g, const RootedTree& t, const VertexLabel& label) {
  std::ostringstream out;
  out << "graph T {\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v << " [";
    if (label) out << "label=" << quoted(label(v)) << ", ";
    if (v == t.root())
      out << "shape=doublecircle";
    else if (!t.contains(v))
      out << "style=dotted";
    else
      out << "shape=circle";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    bool tree_edge = t.contains(e.u) && t.contains(e.v) &&
                     (t.parent(e.u) == e.v || t.parent(e.v) == e.u);
    out << "  " << e.u << " -- " << e.v << (tree_edge ? ";\n" : " [style=dashed];\n");
  }
  out << "}\n";
  return out.str();
}

std::string report_to_json(const NormalityReport& report) {
  json witness = nullptr;
  if (report.witness)
    witness = {{"u", report.witness->u}, {"v", report.witness->v}, {"path", report.witness->path}};
  return dump({{"normal", report.normal}, {"witness", witness}});
}

std::string trace_to_json(const RunTrace& trace) {
  json steps = json::array();
  for (const ExtensionStep& s : trace.steps) {
    json selected = json::array();
    for (const PathSelection& p : s.selected)
      selected.push_back({{"pair", {p.v, p.w}}, {"index", p.index}});
    steps.push_back({{"step", s.step},
                     {"component", ids(s.component)},
                     {"attach_vertex", s.attach_vertex},
                     {"entry_vertex", s.entry_vertex},
                     {"targets", ids(s.targets)},
                     {"selected", selected},
                     {"fallback", s.fallback},
                     {"added", ids(s.added)}});
  }
  return dump({{"root", trace.root},
               {"status", std::string(to_string(trace.status))},
               {"rounds", trace.rounds},
               {"steps", steps},
               {"tree", tree_json(trace.final_tree)}});
}

std::string levels_to_json(const DispersedCover& levels) {
  json out = json::array();
  for (const VertexSet& level : levels) out.push_back(ids(level));
  return dump({{"levels", out}});
}

DispersedCover read_cover_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_array()) parse_fail("cover must be an array of vertex arrays");
  DispersedCover cover;
  for (const json& part : j) cover.push_back(id_set(part, "cover set"));
  return cover;
}

std::string kappa_to_json(const PathFamily& family) {
  return dump({{"v", family.v}, {"w", family.w}, {"kappa", family.size()}, {"paths", family.paths}});
}

std::string separator_to_json(const Separator& separator) {
  return dump({{"separator", ids(separator.vertices)},
               {"a", ids(separator.side_a)},
               {"b", ids(separator.side_b)}});
}

FatTKCertificate read_certificate_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("branch") || !j.contains("m") || !j.contains("paths"))
    parse_fail("certificate JSON needs \"branch\", \"m\" and \"paths\"");
  FatTKCertificate cert;
  for (const json& b : j.at("branch")) cert.branch.push_back(as_id(b, "branch vertex"));
  if (!j.at("m").is_number_unsigned()) parse_fail("\"m\" must be a non-negative integer");
  cert.multiplicity = j.at("m").get<std::size_t>();
  if (!j.at("paths").is_object()) parse_fail("\"paths\" must be an object");
  for (const auto& [key, family] : j.at("paths").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) parse_fail("path key '" + key + "' is not \"i,j\"");
    std::size_t i = id_from_key(key.substr(0, comma));
    std::size_t jj = id_from_key(key.substr(comma + 1));
    if (i >= jj) parse_fail("path key '" + key + "' must have i < j");
    if (!family.is_array()) parse_fail("paths of '" + key + "' must be an array");
    std::vector<Path> paths;
    for (const json& p : family) {
      if (!p.is_array()) parse_fail("every path must be an array of ids");
      Path path;
      for (const json& v : p) path.push_back(as_id(v, "path vertex"));
      paths.push_back(std::move(path));
    }
    cert.paths[{i, jj}] = std::move(paths);
  }
  return cert;
}

std::string write_certificate_json(const FatTKCertificate& cert) {
  return dump(certificate_json(cert));
}

std::string search_to_json(const FatTKSearch& search, const std::vector<VertexId>& branch) {
  if (search.certificate)
    return dump({{"found", true}, {"certificate", certificate_json(*search.certificate)}});
  const FatTKFailure& f = *search.failure;
  return dump({{"found", false},
               {"failure",
                {{"pair", {branch.at(f.i), branch.at(f.j)}},
                 {"routed", f.routed},
                 {"separator", ids(f.separator)}}}});
}

std::string verify_to_json(const VerifyResult& result) {
  json reason = nullptr;
  if (!result.valid) reason = result.reason;
  return dump({{"valid", result.valid}, {"reason", reason}});
}

std::string verdict_to_json(const DispersednessVerdict& verdict) {
  json examined = json::array();
  for (const DispersedExamination& e : verdict.examined) {
    json sep = nullptr;
    if (e.separator) sep = ids(*e.separator);
    examined.push_back({{"certificate", certificate_json(e.certificate)}, {"separator", sep}});
  }
  return dump({{"dispersed", verdict.dispersed},
               {"candidates_examined", verdict.candidates_examined},
               {"certificates", examined}});
}

std::string generators_to_json() {
  json out = json::array();
  for (const GeneratorInfo& info : builtin_generators())
    out.push_back({{"name", info.name}, {"description", info.description}});
  return dump({{"generators", out}});
}

}  // namespace ntk::io
