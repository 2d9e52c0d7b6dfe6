#pragma once

#include <map>

#include "ckgraph/label.hpp"

namespace ckgraph::oracle {

// Whether a directed path from u to v exists in CK(2,l), decided from the
// imprint sign counts alone (no graph search). u and v must be
// cyclic-Kautz-valid labels of equal length over {0,1,2}; throws
// std::domain_error for other alphabets and std::invalid_argument for
// invalid labels.
bool reachable(const Label& u, const Label& v);

// Number of CK(2,l) vertices per realized imprint plus-count, l >= 2.
std::map<int, long long> component_census(int l);

}  // namespace ckgraph::oracle
