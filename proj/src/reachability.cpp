#include "ckgraph/reachability.hpp"

#include <stdexcept>

#include "ckgraph/families.hpp"

namespace ckgraph::oracle {

namespace {

void check_ck2_vertex(const Label& seq) {
  for (Symbol s : seq)
    if (s < 0 || s > 2)
      throw std::domain_error("the reachability oracle is defined only for d = 2");
  if (!is_cyclic_kautz_label(seq, 2))
    throw std::invalid_argument("\"" + seq.str() + "\" is not a cyclic Kautz label");
}

}  // namespace

bool reachable(const Label& u, const Label& v) {
  check_ck2_vertex(u);
  check_ck2_vertex(v);
  if (u.size() != v.size())
    throw std::invalid_argument("labels must have equal length");
  return imprint(u).plus_count() == imprint(v).plus_count();
}

std::map<int, long long> component_census(int l) {
  if (l < 2) throw std::domain_error("component census requires l >= 2");
  std::map<int, long long> census;
  for (const Label& vertex : cyclic_kautz_labels(2, l)) ++census[imprint(vertex).plus_count()];
  return census;
}

}  // namespace ckgraph::oracle
