#include "ckgraph/export.hpp"

#include <cctype>

namespace ckgraph {

namespace {

bool plain_dot_id(std::string_view name) {
  if (name.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

}  // namespace

std::string dot_export(const Digraph& g, std::string_view graph_name) {
  std::string out = "digraph ";
  if (plain_dot_id(graph_name)) {
    out += graph_name;
  } else {
    out += '"';
    out += graph_name;
    out += '"';
  }
  out += " {\n";
  for (const std::string& v : g.names()) {
    out += "  \"";
    out += v;
    out += "\";\n";
  }
  for (int u = 0; u < static_cast<int>(g.vertex_count()); ++u) {
    for (int v : g.out_neighbors(u)) {
      out += "  \"";
      out += g.name(u);
      out += "\" -> \"";
      out += g.name(v);
      out += "\";\n";
    }
  }
  out += "}\n";
  return out;
}

nlohmann::ordered_json diameter_json(const Diameter& diam) {
  nlohmann::ordered_json j;
  switch (diam.kind) {
    case Diameter::Kind::finite:
      j["kind"] = "FINITE";
      j["value"] = diam.value;
      break;
    case Diameter::Kind::infinite:
      j["kind"] = "INFINITE";
      break;
    case Diameter::Kind::nonexistent:
      j["kind"] = "NONEXISTENT";
      break;
  }
  return j;
}

nlohmann::ordered_json stats_json(const Digraph& g, std::string_view family, int d, int l,
                                  int t) {
  const DegreeProfile deg = degree_profile(g);
  nlohmann::ordered_json j;
  j["family"] = family;
  j["d"] = d;
  j["l"] = l;
  j["t"] = t;
  j["vertices"] = g.vertex_count();
  j["arcs"] = g.arc_count();
  j["min_out"] = deg.min_out;
  j["max_out"] = deg.max_out;
  j["min_in"] = deg.min_in;
  j["max_in"] = deg.max_in;
  j["diameter"] = diameter_json(diameter(g));
  return j;
}

nlohmann::ordered_json digraph_json(const Digraph& g, std::string_view family, int d, int l) {
  nlohmann::ordered_json j;
  j["family"] = family;
  j["d"] = d;
  j["l"] = l;
  j["vertices"] = g.names();
  auto arcs = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back({u, v});
  j["arcs"] = std::move(arcs);
  return j;
}

}  // namespace ckgraph
