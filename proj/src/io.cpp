#include "dichroma/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dichroma {

std::string canonical_text(const Json& j) { return j.dump(2) + "\n"; }

Json digraph_to_json(const Digraph& d) {
  Json j;
  j["vertices"] = d.vertices();
  Json edges = Json::array();
  for (const auto& [u, v] : d.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = edges;
  return j;
}

Digraph digraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error("digraph document needs \"vertices\" and \"edges\"");
  std::vector<VertexId> vertices = j.at("vertices").get<std::vector<VertexId>>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("each edge must be a pair [u, v]");
    edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
  }
  return Digraph::validate(std::move(vertices), std::move(edges));
}

Json truncation_to_json(const Truncation& t) {
  Json j = digraph_to_json(t.graph());
  j["depth"] = t.depth();
  j["g"] = t.g().values();
  Json labels = Json::array();
  for (const auto& v : t.labels()) labels.push_back(v.coords);
  j["labels"] = labels;
  return j;
}

Truncation truncation_from_json(const Json& j) {
  if (!j.contains("g") || !j.contains("depth") || !j.contains("labels"))
    throw Error("truncation document needs \"g\", \"depth\" and \"labels\"");
  GrowthFunction g(j.at("g").get<std::vector<int>>());
  int depth = j.at("depth").get<int>();
  Digraph stored = digraph_from_json(j);
  Truncation t = build_truncation(g, depth, std::max<long long>(kDefaultSizeCap,
                                                                stored.vertex_count()));
  // The construction is deterministic, so a genuine truncation document must
  // reproduce itself exactly.
  if (!(t.graph() == stored)) throw Error("document does not describe a product truncation");
  Json labels = Json::array();
  for (const auto& v : t.labels()) labels.push_back(v.coords);
  if (labels != j.at("labels")) throw Error("document labels do not match the construction");
  return t;
}

Json condition_to_json(const Condition& c) {
  Json j = digraph_to_json(c.graph());
  j["f"] = c.f().values();
  if (c.distinguished())
    j["distinguished"] = *c.distinguished();
  else
    j["distinguished"] = nullptr;
  return j;
}

Condition condition_from_json(const Json& j) {
  if (!j.contains("f")) throw Error("condition document needs \"f\"");
  GrowthFunction f(j.at("f").get<std::vector<int>>());
  Digraph graph = digraph_from_json(j);
  std::optional<VertexId> distinguished;
  if (j.contains("distinguished") && !j.at("distinguished").is_null())
    distinguished = j.at("distinguished").get<VertexId>();
  return make_condition(std::move(graph), std::move(f), distinguished);
}

Json coloring_to_json(const Coloring& c) {
  Json colors = Json::array();
  for (const auto& [v, color] : c.assignment()) colors.push_back(Json::array({v, color}));
  Json j;
  j["colors"] = colors;
  return j;
}

Coloring coloring_from_json(const Json& j) {
  std::map<VertexId, int> assignment;
  for (const auto& e : j.at("colors")) {
    if (!e.is_array() || e.size() != 2) throw Error("each entry must be a pair [vertex, colour]");
    assignment[e.at(0).get<VertexId>()] = e.at(1).get<int>();
  }
  return Coloring(std::move(assignment));
}

namespace {

Json entry_to_json(const FProfile::Entry& e) {
  switch (e.kind) {
    case FProfile::Entry::Kind::finite:
      return e.value;
    case FProfile::Entry::Kind::infinite:
      return "inf";
    case FProfile::Entry::Kind::unknown:
      return "unknown";
  }
  return nullptr;
}

}  // namespace

Json profile_to_json(const FProfile& p) {
  Json entries = Json::object();
  for (const auto& [k, e] : p.entries) entries[std::to_string(k)] = entry_to_json(e);
  Json j;
  j["cap"] = p.size_cap;
  j["profile"] = entries;
  return j;
}

Json fbound_report_to_json(const FBoundReport& r, int size_cap) {
  Json j;
  j["cap"] = size_cap;
  switch (r.verdict) {
    case FBoundReport::Verdict::holds:
      j["verdict"] = "HOLDS";
      break;
    case FBoundReport::Verdict::violated:
      j["verdict"] = "VIOLATED";
      break;
    case FBoundReport::Verdict::unknown:
      j["verdict"] = "UNKNOWN";
      break;
  }
  if (r.verdict == FBoundReport::Verdict::violated)
    j["witness"] = r.witness;
  else
    j["witness"] = nullptr;
  return j;
}

std::string digraph_to_edge_list(const Digraph& d) {
  std::vector<char> isolated(static_cast<size_t>(d.vertex_count()), 1);
  for (const auto& [u, v] : d.edges()) {
    isolated[static_cast<size_t>(d.index_of(u))] = 0;
    isolated[static_cast<size_t>(d.index_of(v))] = 0;
  }
  std::ostringstream out;
  for (int i = 0; i < d.vertex_count(); ++i)
    if (isolated[static_cast<size_t>(i)]) out << d.id_at(i) << "\n";
  for (const auto& [u, v] : d.edges()) out << u << " " << v << "\n";
  return out.str();
}

Digraph digraph_from_edge_list(const std::string& text) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    long long a;
    if (!(ls >> a)) continue;  // blank line
    long long b;
    if (ls >> b) {
      edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
      vertices.push_back(static_cast<VertexId>(a));
      vertices.push_back(static_cast<VertexId>(b));
    } else {
      vertices.push_back(static_cast<VertexId>(a));
    }
    std::string rest;
    if (ls.clear(), ls >> rest)
      throw Error("line " + std::to_string(line_no) + " has trailing content");
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Digraph::validate(std::move(vertices), std::move(edges));
}

std::string digraph_to_dot(const Digraph& d) {
  std::vector<char> isolated(static_cast<size_t>(d.vertex_count()), 1);
  for (const auto& [u, v] : d.edges()) {
    isolated[static_cast<size_t>(d.index_of(u))] = 0;
    isolated[static_cast<size_t>(d.index_of(v))] = 0;
  }
  std::ostringstream out;
  out << "digraph {\n";
  for (int i = 0; i < d.vertex_count(); ++i)
    if (isolated[static_cast<size_t>(i)]) out << "  " << d.id_at(i) << ";\n";
  for (const auto& [u, v] : d.edges()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("failed while writing " + path);
}

}  // namespace dichroma
