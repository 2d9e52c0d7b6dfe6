#include <doctest.h>

#include "ckgraph/export.hpp"
#include "ckgraph/families.hpp"

using namespace ckgraph;

TEST_CASE("dot export format") {
  const std::string dot = dot_export(cyclic_kautz(2, 3), "CK_2_3");
  CHECK(dot ==
        "digraph CK_2_3 {\n"
        "  \"012\";\n"
        "  \"021\";\n"
        "  \"102\";\n"
        "  \"120\";\n"
        "  \"201\";\n"
        "  \"210\";\n"
        "  \"012\" -> \"120\";\n"
        "  \"021\" -> \"210\";\n"
        "  \"102\" -> \"021\";\n"
        "  \"120\" -> \"201\";\n"
        "  \"201\" -> \"012\";\n"
        "  \"210\" -> \"102\";\n"
        "}\n");
}

TEST_CASE("dot export quotes awkward graph names") {
  const Digraph g = Digraph::build({"a"}, {});
  CHECK(dot_export(g, "2cycle") == "digraph \"2cycle\" {\n  \"a\";\n}\n");
  CHECK(dot_export(g, "L2_CK_2_4") == "digraph L2_CK_2_4 {\n  \"a\";\n}\n");
}

TEST_CASE("diameter json") {
  CHECK(diameter_json(Diameter::finite(7)).dump() == R"({"kind":"FINITE","value":7})");
  CHECK(diameter_json(Diameter::infinite()).dump() == R"({"kind":"INFINITE"})");
  CHECK(diameter_json(Diameter::nonexistent()).dump() == R"({"kind":"NONEXISTENT"})");
}

TEST_CASE("stats record") {
  const auto j = stats_json(cyclic_kautz(2, 4), "CK", 2, 4, 0);
  CHECK(j["family"] == "CK");
  CHECK(j["d"] == 2);
  CHECK(j["l"] == 4);
  CHECK(j["t"] == 0);
  CHECK(j["vertices"] == 18);
  CHECK(j["arcs"] == 30);
  CHECK(j["min_out"] == 1);
  CHECK(j["max_out"] == 2);
  CHECK(j["min_in"] == 1);
  CHECK(j["max_in"] == 2);
  CHECK(j["diameter"]["kind"] == "FINITE");
  CHECK(j["diameter"]["value"] == 7);
  // Field order is the documented record order.
  CHECK(j.dump().rfind(R"({"family":"CK","d":2,"l":4,"t":0,"vertices":18,"arcs":30)", 0) == 0);
}

TEST_CASE("digraph json") {
  const auto j = digraph_json(cyclic_kautz(2, 3), "CK", 2, 3);
  CHECK(j["vertices"].size() == 6);
  CHECK(j["arcs"].size() == 6);
  CHECK(j["vertices"][0] == "012");
  CHECK(j["arcs"][0][0] == "012");
  CHECK(j["arcs"][0][1] == "120");
}
