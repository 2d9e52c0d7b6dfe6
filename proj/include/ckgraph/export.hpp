#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "ckgraph/digraph.hpp"

namespace ckgraph {

// DOT text: one quoted line per vertex, one "u" -> "v" line per arc, both in
// vertex-index order. The graph name is emitted as-is when it is a plain DOT
// identifier and quoted otherwise.
std::string dot_export(const Digraph& g, std::string_view graph_name);

// {"kind": "FINITE", "value": 7} — the value key appears only when finite.
nlohmann::ordered_json diameter_json(const Diameter& diam);

// The stats record: family, d, l, t, vertex/arc counts, degree extremes and
// diameter. Computes the diameter (all-pairs BFS).
nlohmann::ordered_json stats_json(const Digraph& g, std::string_view family, int d, int l,
                                  int t);

// Full digraph dump with vertex and arc lists.
nlohmann::ordered_json digraph_json(const Digraph& g, std::string_view family, int d, int l);

}  // namespace ckgraph
