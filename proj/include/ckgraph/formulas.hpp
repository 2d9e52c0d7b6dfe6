#pragma once

#include <gmpxx.h>

#include "ckgraph/digraph.hpp"

namespace ckgraph {

using BigInt = mpz_class;

// Counts of the three classes of even-length sequences behind the
// two-step counting recurrence. For sequences a_1..a_l over d+1 symbols with
// distinct consecutive symbols and the window condition a_i != a_{i+l/2}:
//   c — those with a_{l/2+1} equal to the last symbol,
//   d — those with a_{l/2+1} different from the last symbol,
//   b — the auxiliary class: as d, except the middle pair a_{l/2}, a_{l/2+1}
//       is forced equal (its members violate the consecutive rule there).
struct CountTriple {
  BigInt b;
  BigInt c;
  BigInt d;

  bool operator==(const CountTriple&) const = default;
};

// Number of vertices of CK(d,l): (-1)^l * d + d^l. The closed form is the
// one reported for the family; note it evaluates to 0 at l = 1 while the
// length-1 digraph on single-symbol labels has d+1 vertices.
BigInt ck_vertex_count(int d, int l);

// Number of arcs of CK(d,l) for l >= 3; l = 2 returns (d+1)d^2.
// Throws std::domain_error for l < 2.
BigInt ck_arc_count(int d, int l);

// The full diameter case table of CK(d,l): FINITE(1) for l = 1; for d = 1,
// FINITE(1) at even l and NONEXISTENT at odd l; FINITE(2) at l = 2;
// for d = 2, FINITE(7) at l = 4 and INFINITE otherwise; FINITE(5) at l = 3;
// FINITE(2l-1) for d = 3; FINITE(2l-2) for d >= 4.
// Known divergence: at (3,4) the table gives 7 while exhaustive search over
// the constructed digraph gives 6.
Diameter ck_diameter_formula(int d, int l);

// Closed forms for the class counts at even length >= 4.
CountTriple bcd_closed_form(int d, int l_even);

// The same triple obtained by iterating the linear system from the length-6
// base; defined for even length >= 6 and equal to bcd_closed_form.
CountTriple bcd_recurrence(int d, int l_even);

// Number of sequences of length 2r+j over d+1 symbols with distinct
// consecutive symbols and windows a_i != a_{i+r+j} for i = 1..r.
// Requires d >= 2, r >= 2, j >= 0.
BigInt e_closed_form(int d, int r, int j);

// Number of vertices of the t-iterated line digraph of CK(d,l), valid for
// 0 <= t <= l-2 (throws std::domain_error outside that range). The
// indeterminate form (d-2)^0 at d = 2 is taken as 1.
BigInt ck_iterated_vertex_count(int d, int l, int t);

// Number of vertices of the t-iterated line digraph of CK(d,4) for any
// t >= 0, computed by the integer recurrence N_t = (d-1)N_{t-1} + N_{t-2}.
BigInt ck4_count_closed_form(int d, int t);

// The radical closed form of the same count, evaluated in floating point.
// A consistency check only; the integer recurrence is the returned truth.
double ck4_count_radical_estimate(int d, int t);

}  // namespace ckgraph
