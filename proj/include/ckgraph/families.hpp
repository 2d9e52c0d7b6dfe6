#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ckgraph/digraph.hpp"
#include "ckgraph/label.hpp"

namespace ckgraph {

enum class Family { kautz, de_bruijn, cyclic_kautz, modified_cyclic_kautz };

// Short codes used by the CLI and exports: "K", "DB", "CK", "MCK".
std::string_view family_code(Family f);
Family parse_family(std::string_view code);

struct FamilySpec {
  Family family = Family::cyclic_kautz;
  int d = 1;
  int l = 1;

  std::string str() const;       // "CK(2,4)"
  std::string dot_name() const;  // "CK_2_4"
};

// All Kautz-valid labels of length l over the alphabet {0..d}, in order.
std::vector<Label> kautz_labels(int d, int l);
// All labels of length l over {0..d-1}, repeats allowed.
std::vector<Label> de_bruijn_labels(int d, int l);
// Kautz-valid labels with first != last (vacuous at l = 1).
std::vector<Label> cyclic_kautz_labels(int d, int l);

// K(d,l): (d+1)d^(l-1) vertices, arcs shift the label left by one; d-regular.
Digraph kautz(int d, int l);

// B(d,l): all d^l sequences over d symbols, shift adjacency, loops on the
// constant sequences.
Digraph de_bruijn(int d, int l);

// CK(d,l): Kautz labels with first != last; an arc requires both endpoints
// valid. (1, odd l) yields the empty digraph.
Digraph cyclic_kautz(int d, int l);

// MCK(d,l): the vertices of CK(d,l); every shift whose natural target is
// forbidden (new first symbol equal to new last) is rerouted by replacing the
// target's first symbol with the smallest symbol differing from both its
// neighbors. d-out-regular with diameter l. Requires d >= 2 and l >= 3.
Digraph modified_cyclic_kautz(int d, int l);

Digraph build_family(const FamilySpec& spec);

}  // namespace ckgraph
