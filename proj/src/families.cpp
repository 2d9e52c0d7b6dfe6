#include "ckgraph/families.hpp"

#include <stdexcept>

namespace ckgraph {

std::string_view family_code(Family f) {
  switch (f) {
    case Family::kautz:
      return "K";
    case Family::de_bruijn:
      return "DB";
    case Family::cyclic_kautz:
      return "CK";
    case Family::modified_cyclic_kautz:
      return "MCK";
  }
  return "CK";
}

Family parse_family(std::string_view code) {
  if (code == "K") return Family::kautz;
  if (code == "DB") return Family::de_bruijn;
  if (code == "CK") return Family::cyclic_kautz;
  if (code == "MCK") return Family::modified_cyclic_kautz;
  throw std::invalid_argument("unknown family \"" + std::string(code) +
                              "\" (expected K, DB, CK or MCK)");
}

std::string FamilySpec::str() const {
  return std::string(family_code(family)) + "(" + std::to_string(d) + "," + std::to_string(l) +
         ")";
}

std::string FamilySpec::dot_name() const {
  return std::string(family_code(family)) + "_" + std::to_string(d) + "_" + std::to_string(l);
}

namespace {

void check_params(int d, int l) {
  if (d < 1) throw std::domain_error("degree parameter d must be >= 1");
  if (l < 1) throw std::domain_error("label length l must be >= 1");
}

// Depth-first enumeration of sequences over {0..alphabet-1} with distinct
// consecutive symbols; cyclic additionally requires first != last (for
// length >= 2). Output follows symbol order, so the result is sorted.
void enumerate_kautz(int alphabet, int l, bool cyclic, std::vector<Symbol>& prefix,
                     std::vector<Label>& out) {
  if (static_cast<int>(prefix.size()) == l) {
    if (cyclic && l > 1 && prefix.front() == prefix.back()) return;
    out.emplace_back(prefix);
    return;
  }
  for (Symbol s = 0; s < alphabet; ++s) {
    if (!prefix.empty() && prefix.back() == s) continue;
    prefix.push_back(s);
    enumerate_kautz(alphabet, l, cyclic, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Arc> shift_arcs(const std::vector<Label>& labels, int alphabet,
                            bool consecutive_distinct, bool cyclic) {
  std::vector<Arc> arcs;
  for (const Label& u : labels) {
    std::vector<Symbol> target(u.begin() + 1, u.end());
    target.push_back(0);
    for (Symbol x = 0; x < alphabet; ++x) {
      if (consecutive_distinct && x == u.back()) continue;
      if (cyclic && u.size() > 1 && x == u[1]) continue;
      target.back() = x;
      arcs.emplace_back(u.str(), Label(target).str());
    }
  }
  return arcs;
}

std::vector<std::string> label_strings(const std::vector<Label>& labels) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const Label& label : labels) out.push_back(label.str());
  return out;
}

}  // namespace

std::vector<Label> kautz_labels(int d, int l) {
  check_params(d, l);
  std::vector<Label> out;
  std::vector<Symbol> prefix;
  enumerate_kautz(d + 1, l, /*cyclic=*/false, prefix, out);
  return out;
}

std::vector<Label> de_bruijn_labels(int d, int l) {
  check_params(d, l);
  std::vector<Label> out;
  std::vector<Symbol> current(static_cast<std::size_t>(l), 0);
  while (true) {
    out.emplace_back(current);
    int pos = l - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == d - 1) {
      current[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<Label> cyclic_kautz_labels(int d, int l) {
  check_params(d, l);
  std::vector<Label> out;
  std::vector<Symbol> prefix;
  enumerate_kautz(d + 1, l, /*cyclic=*/true, prefix, out);
  return out;
}

Digraph kautz(int d, int l) {
  const auto labels = kautz_labels(d, l);
  return Digraph::build(label_strings(labels),
                        shift_arcs(labels, d + 1, /*consecutive_distinct=*/true,
                                   /*cyclic=*/false));
}

Digraph de_bruijn(int d, int l) {
  const auto labels = de_bruijn_labels(d, l);
  return Digraph::build(label_strings(labels),
                        shift_arcs(labels, d, /*consecutive_distinct=*/false,
                                   /*cyclic=*/false));
}

Digraph cyclic_kautz(int d, int l) {
  const auto labels = cyclic_kautz_labels(d, l);
  return Digraph::build(label_strings(labels),
                        shift_arcs(labels, d + 1, /*consecutive_distinct=*/true,
                                   /*cyclic=*/true));
}

Digraph modified_cyclic_kautz(int d, int l) {
  if (d < 2)
    throw std::domain_error("MCK requires d >= 2: no replacement symbol exists for d = 1");
  if (l < 3)
    throw std::domain_error("MCK requires l >= 3: no shift of a length-" + std::to_string(l) +
                            " label is ever forbidden");
  const auto labels = cyclic_kautz_labels(d, l);
  std::vector<Arc> arcs;
  for (const Label& u : labels) {
    std::vector<Symbol> target(u.begin() + 1, u.end());
    target.push_back(0);
    for (Symbol x = 0; x <= d; ++x) {
      if (x == u.back()) continue;
      target.back() = x;
      if (x != u[1]) {
        arcs.emplace_back(u.str(), Label(target).str());
        continue;
      }
      // Natural target a2..al,x has equal first and last symbol; replace its
      // first symbol with the smallest one avoiding both neighbors.
      Symbol replacement = 0;
      while (replacement == u[2] || replacement == x) ++replacement;
      const Symbol saved = target.front();
      target.front() = replacement;
      arcs.emplace_back(u.str(), Label(target).str());
      target.front() = saved;
    }
  }
  return Digraph::build(label_strings(labels), std::move(arcs));
}

Digraph build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kautz:
      return kautz(spec.d, spec.l);
    case Family::de_bruijn:
      return de_bruijn(spec.d, spec.l);
    case Family::cyclic_kautz:
      return cyclic_kautz(spec.d, spec.l);
    case Family::modified_cyclic_kautz:
      return modified_cyclic_kautz(spec.d, spec.l);
  }
  throw std::logic_error("unhandled family");
}

}  // namespace ckgraph
