#include <doctest.h>

#include <stdexcept>

#include "ckgraph/families.hpp"
#include "ckgraph/formulas.hpp"
#include "ckgraph/reachability.hpp"

using namespace ckgraph;

TEST_CASE("oracle basics") {
  CHECK(oracle::reachable(Label::parse("012"), Label::parse("012")));
  CHECK_FALSE(oracle::reachable(Label::parse("012"), Label::parse("021")));
  CHECK_FALSE(oracle::reachable(Label::parse("01212"), Label::parse("02101")));
  CHECK_THROWS_AS(oracle::reachable(Label::parse("013"), Label::parse("012")),
                  std::domain_error);
  CHECK_THROWS_AS(oracle::reachable(Label::parse("010"), Label::parse("012")),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle::reachable(Label::parse("01"), Label::parse("012")),
                  std::invalid_argument);
}

TEST_CASE("oracle is symmetric") {
  for (int l = 2; l <= 6; ++l) {
    const auto labels = cyclic_kautz_labels(2, l);
    for (const Label& u : labels)
      for (const Label& v : labels)
        CHECK(oracle::reachable(u, v) == oracle::reachable(v, u));
  }
}

TEST_CASE("oracle matches bfs reachability") {
  for (int l = 2; l <= 8; ++l) {
    const Digraph g = cyclic_kautz(2, l);
    const int n = static_cast<int>(g.vertex_count());
    std::vector<Label> labels;
    for (const std::string& name : g.names()) labels.push_back(Label::parse(name));
    for (int u = 0; u < n; ++u) {
      const auto dist = bfs_distances(g, u);
      for (int v = 0; v < n; ++v)
        CHECK(oracle::reachable(labels[static_cast<std::size_t>(u)],
                                labels[static_cast<std::size_t>(v)]) ==
              (dist[static_cast<std::size_t>(v)] != kUnreachable));
    }
  }
}

TEST_CASE("component census") {
  const auto census4 = oracle::component_census(4);
  REQUIRE(census4.size() == 1);
  CHECK(census4.at(2) == 18);

  const auto census3 = oracle::component_census(3);
  REQUIRE(census3.size() == 2);
  CHECK(census3.at(0) == 3);
  CHECK(census3.at(3) == 3);

  const auto census2 = oracle::component_census(2);
  REQUIRE(census2.size() == 1);
  CHECK(census2.at(1) == 6);

  CHECK_THROWS_AS(oracle::component_census(1), std::domain_error);
}

TEST_CASE("census totals match the vertex count") {
  for (int l = 2; l <= 8; ++l) {
    long total = 0;
    for (const auto& [plus, count] : oracle::component_census(l)) total += count;
    CHECK(BigInt(total) == ck_vertex_count(2, l));
  }
}

TEST_CASE("census classes match the strongly connected components") {
  // Same plus-count means same component; the census sizes are exactly the
  // component sizes whenever each class is nonempty.
  for (int l = 2; l <= 7; ++l) {
    const Digraph g = cyclic_kautz(2, l);
    const auto classes = strongly_connected_components(g);
    std::map<int, long long> by_class;
    for (const auto& members : classes) {
      const int plus = imprint(Label::parse(g.name(members[0]))).plus_count();
      by_class[plus] += static_cast<long long>(members.size());
    }
    CHECK(by_class == oracle::component_census(l));
  }
}
