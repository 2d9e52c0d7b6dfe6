#include <doctest.h>

#include <set>
#include <stdexcept>

#include "ckgraph/families.hpp"
#include "ckgraph/label.hpp"

using namespace ckgraph;

TEST_CASE("family codes") {
  CHECK(parse_family("K") == Family::kautz);
  CHECK(parse_family("DB") == Family::de_bruijn);
  CHECK(parse_family("CK") == Family::cyclic_kautz);
  CHECK(parse_family("MCK") == Family::modified_cyclic_kautz);
  CHECK_THROWS_AS(parse_family("X"), std::invalid_argument);
  const FamilySpec spec{Family::cyclic_kautz, 2, 4};
  CHECK(spec.str() == "CK(2,4)");
  CHECK(spec.dot_name() == "CK_2_4");
}

TEST_CASE("kautz digraphs") {
  const Digraph k23 = kautz(2, 3);
  CHECK(k23.vertex_count() == 12);
  CHECK(k23.arc_count() == 24);

  const Digraph k12 = kautz(1, 2);
  CHECK(k12.names() == std::vector<std::string>{"01", "10"});
  CHECK(k12.arc_count() == 2);

  const Digraph k32 = kautz(3, 2);
  CHECK(k32.vertex_count() == 12);
  const DegreeProfile deg = degree_profile(k32);
  CHECK(deg.is_regular);
  CHECK(deg.min_out == 3);

  CHECK_THROWS_AS(kautz(0, 2), std::domain_error);
  CHECK_THROWS_AS(kautz(2, 0), std::domain_error);
}

TEST_CASE("kautz vertex count and regularity across the grid") {
  for (int d = 1; d <= 4; ++d) {
    std::size_t expected = static_cast<std::size_t>(d) + 1;  // (d+1)d^(l-1)
    for (int l = 1; l <= 4; ++l) {
      const Digraph g = kautz(d, l);
      CHECK(g.vertex_count() == expected);
      const DegreeProfile deg = degree_profile(g);
      CHECK(deg.is_regular);
      CHECK(deg.min_out == static_cast<std::size_t>(d));
      expected *= static_cast<std::size_t>(d);
    }
  }
}

TEST_CASE("kautz digraphs are iterated line digraphs") {
  for (int d = 2; d <= 3; ++d)
    for (int l = 2; l <= 4; ++l) {
      CHECK(kautz(d, l) == line_digraph(kautz(d, l - 1)));
      CHECK(kautz(d, l) == iterated_line_digraph(kautz(d, 1), l - 1));
    }
}

TEST_CASE("de bruijn digraphs") {
  const Digraph b23 = de_bruijn(2, 3);
  CHECK(b23.vertex_count() == 8);
  CHECK(b23.arc_count() == 16);
  int loops = 0;
  for (int v = 0; v < static_cast<int>(b23.vertex_count()); ++v)
    if (b23.has_arc(v, v)) ++loops;
  CHECK(loops == 2);
  CHECK(b23.has_arc(b23.index("000"), b23.index("000")));

  const Digraph b15 = de_bruijn(1, 5);
  CHECK(b15.vertex_count() == 1);
  CHECK(b15.arc_count() == 1);

  const Digraph b21 = de_bruijn(2, 1);
  CHECK(b21.vertex_count() == 2);
  CHECK(b21.arc_count() == 4);

  CHECK(de_bruijn(2, 3) == line_digraph(de_bruijn(2, 2)));
  CHECK(de_bruijn(2, 3) == iterated_line_digraph(de_bruijn(2, 1), 2));
}

TEST_CASE("cyclic kautz digraphs") {
  const Digraph ck23 = cyclic_kautz(2, 3);
  CHECK(ck23.vertex_count() == 6);
  CHECK(ck23.arc_count() == 6);

  CHECK(cyclic_kautz(1, 3).empty());
  CHECK(cyclic_kautz(3, 4).vertex_count() == 84);
  CHECK(cyclic_kautz(2, 1).vertex_count() == 3);

  // Explicit arc set of CK(2,3): the two directed triangles of rotations.
  const std::set<Arc> expected = {{"012", "120"}, {"120", "201"}, {"201", "012"},
                                  {"021", "210"}, {"210", "102"}, {"102", "021"}};
  const auto arcs = ck23.arcs();
  CHECK(std::set<Arc>(arcs.begin(), arcs.end()) == expected);

  // Building from the explicit lists yields the same digraph.
  const Digraph rebuilt = Digraph::build({"012", "021", "102", "120", "201", "210"},
                                         {expected.begin(), expected.end()});
  CHECK(rebuilt == ck23);
}

TEST_CASE("cyclic kautz is the induced subdigraph of kautz") {
  for (int d = 1; d <= 3; ++d)
    for (int l = 2; l <= 5; ++l) {
      const Digraph ck = cyclic_kautz(d, l);
      const Digraph k = kautz(d, l);
      std::size_t induced = 0;
      for (int u = 0; u < static_cast<int>(k.vertex_count()); ++u) {
        if (!ck.find(k.name(u))) continue;
        for (int v : k.out_neighbors(u))
          if (ck.find(k.name(v))) ++induced;
      }
      CHECK(induced == ck.arc_count());
      for (const auto& [u, v] : ck.arcs()) CHECK(k.has_arc(k.index(u), k.index(v)));
    }
}

TEST_CASE("cyclic kautz labels are closed under rotation") {
  for (int d = 1; d <= 3; ++d)
    for (int l = 2; l <= 5; ++l) {
      const Digraph ck = cyclic_kautz(d, l);
      for (const std::string& name : ck.names()) {
        const Label label = Label::parse(name);
        for (int k = 1; k < l; ++k) CHECK(ck.find(rotate(label, k).str()).has_value());
      }
    }
}

TEST_CASE("cyclic kautz coincides with kautz at length two") {
  for (int d = 1; d <= 4; ++d) CHECK(cyclic_kautz(d, 2) == kautz(d, 2));
}

TEST_CASE("cyclic kautz maximum out-degree is d beyond length three") {
  for (int d = 1; d <= 3; ++d)
    for (int l = 4; l <= 6; ++l) {
      if (d == 1 && l % 2 == 1) continue;
      CHECK(degree_profile(cyclic_kautz(d, l)).max_out == static_cast<std::size_t>(d));
    }
}

TEST_CASE("modified cyclic kautz digraphs") {
  const Digraph m23 = modified_cyclic_kautz(2, 3);
  CHECK(m23.vertex_count() == 6);
  CHECK(m23.arc_count() == 12);
  const DegreeProfile deg23 = degree_profile(m23);
  CHECK(deg23.is_out_regular);
  CHECK(deg23.min_out == 2);

  const Digraph m24 = modified_cyclic_kautz(2, 4);
  CHECK(m24.vertex_count() == 18);
  CHECK(diameter(m24) == Diameter::finite(4));
  CHECK(diameter(modified_cyclic_kautz(2, 5)) == Diameter::finite(5));
  CHECK(diameter(modified_cyclic_kautz(3, 3)) == Diameter::finite(3));
  // Known divergence from the diameter-l rule: at (2,3) the replacement arcs
  // are forced (only one symbol avoids both neighbors), and the resulting
  // six-vertex digraph has diameter 2, one less than l.
  CHECK(diameter(m23) == Diameter::finite(2));

  const Digraph m33 = modified_cyclic_kautz(3, 3);
  CHECK(m33.vertex_count() == 24);
  const DegreeProfile deg33 = degree_profile(m33);
  CHECK(deg33.is_out_regular);
  CHECK(deg33.min_out == 3);

  CHECK_THROWS_AS(modified_cyclic_kautz(1, 4), std::domain_error);
  CHECK_THROWS_AS(modified_cyclic_kautz(2, 2), std::domain_error);
}

TEST_CASE("modified cyclic kautz contains the cyclic kautz arcs") {
  for (int d = 2; d <= 3; ++d)
    for (int l = 3; l <= 5; ++l) {
      const Digraph ck = cyclic_kautz(d, l);
      const Digraph mck = modified_cyclic_kautz(d, l);
      CHECK(mck.names() == ck.names());
      for (const auto& [u, v] : ck.arcs()) CHECK(mck.has_arc(mck.index(u), mck.index(v)));
    }
}

TEST_CASE("modified cyclic kautz equals the partial line digraph of kautz") {
  for (int d = 2; d <= 3; ++d)
    for (int l = 3; l <= 5; ++l) {
      const Digraph base = kautz(d, l - 1);
      std::vector<Arc> keep;
      for (const auto& [u, v] : base.arcs())
        if (Label::parse(u).front() != Label::parse(v).back()) keep.emplace_back(u, v);
      CHECK(partial_line_digraph(base, keep) == modified_cyclic_kautz(d, l));
    }
}

TEST_CASE("build_family dispatch") {
  CHECK(build_family({Family::kautz, 2, 2}) == kautz(2, 2));
  CHECK(build_family({Family::de_bruijn, 2, 2}) == de_bruijn(2, 2));
  CHECK(build_family({Family::cyclic_kautz, 2, 3}) == cyclic_kautz(2, 3));
  CHECK(build_family({Family::modified_cyclic_kautz, 2, 3}) == modified_cyclic_kautz(2, 3));
}
