#include "ckgraph/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace ckgraph {

namespace {

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

// Exact division by two of a provably even quantity.
BigInt half(const BigInt& v) {
  if (mpz_odd_p(v.get_mpz_t()))
    throw std::logic_error("internal: expected an even intermediate value");
  BigInt out;
  mpz_divexact_ui(out.get_mpz_t(), v.get_mpz_t(), 2);
  return out;
}

void check_degree(int d, int min_d) {
  if (d < min_d)
    throw std::domain_error("degree parameter d must be >= " + std::to_string(min_d));
}

void check_even_length(int l, int min_l) {
  if (l < min_l || l % 2 != 0)
    throw std::domain_error("sequence length must be even and >= " + std::to_string(min_l));
}

}  // namespace

BigInt ck_vertex_count(int d, int l) {
  check_degree(d, 1);
  if (l < 1) throw std::domain_error("label length l must be >= 1");
  return parity_sign(l) * BigInt(d) + ipow(d, static_cast<unsigned long>(l));
}

BigInt ck_arc_count(int d, int l) {
  check_degree(d, 1);
  if (l < 2) throw std::domain_error("arc count formula requires l >= 2");
  if (l == 2) return BigInt(d + 1) * d * d;
  return BigInt(d + 1) * ipow(d, static_cast<unsigned long>(l)) -
         BigInt(2 * d - 1) *
             (parity_sign(l - 1) * BigInt(d) + ipow(d, static_cast<unsigned long>(l - 1)));
}

Diameter ck_diameter_formula(int d, int l) {
  check_degree(d, 1);
  if (l < 1) throw std::domain_error("label length l must be >= 1");
  if (l == 1) return Diameter::finite(1);
  if (d == 1) return l % 2 == 0 ? Diameter::finite(1) : Diameter::nonexistent();
  if (l == 2) return Diameter::finite(2);
  if (d == 2) return l == 4 ? Diameter::finite(7) : Diameter::infinite();
  if (l == 3) return Diameter::finite(5);
  if (d == 3) return Diameter::finite(2LL * l - 1);
  return Diameter::finite(2LL * l - 2);
}

CountTriple bcd_closed_form(int d, int l_even) {
  check_degree(d, 2);
  check_even_length(l_even, 4);
  const auto m = static_cast<unsigned long>(l_even / 2 - 1);
  const BigInt core = ipow(BigInt(d) * d - d + 1, m);
  const BigInt edge = ipow(d - 2, m);
  const BigInt power = ipow(d, m + 1);
  const int sign_m = parity_sign(static_cast<int>(m));

  CountTriple t;
  t.b = d * core + half(sign_m * BigInt(d) * (d - 1) * edge - sign_m * (d + 1) * power);
  t.c = d * core + half(sign_m * BigInt(d) * (d - 1) * edge + sign_m * (d + 1) * power);
  t.d = BigInt(d - 1) * d * (core - sign_m * edge);
  return t;
}

CountTriple bcd_recurrence(int d, int l_even) {
  check_degree(d, 2);
  check_even_length(l_even, 6);
  CountTriple t;
  t.b = BigInt(d + 1) * d * ipow(d - 1, 3);
  t.c = BigInt(d + 1) * d * (BigInt(d) * d * d - 2 * d * d + 3 * d - 1);
  t.d = BigInt(d + 1) * d * ipow(d - 1, 2) * (BigInt(d) * d - 2 * d + 3);
  for (int l = 8; l <= l_even; l += 2) {
    CountTriple next;
    next.b = (d - 1) * t.d + d * t.c;
    next.c = (d - 1) * t.d + d * t.b;
    next.d = (BigInt(d) * d - 3 * d + 3) * t.d + ipow(d - 1, 2) * (t.c + t.b);
    t = std::move(next);
  }
  return t;
}

BigInt e_closed_form(int d, int r, int j) {
  check_degree(d, 2);
  if (r < 2) throw std::domain_error("window count r must be >= 2");
  if (j < 0) throw std::domain_error("extension length j must be >= 0");
  const CountTriple t = bcd_closed_form(d, 2 * r);
  const BigInt total = t.b + t.c + t.d;
  // Geometric sum (1 - (-d)^(j+1)) / (d+1) is exact.
  BigInt numer = 1 - ipow(BigInt(-d), static_cast<unsigned long>(j + 1));
  BigInt series;
  mpz_divexact(series.get_mpz_t(), numer.get_mpz_t(), BigInt(d + 1).get_mpz_t());
  return parity_sign(j) * (total * series - t.b);
}

BigInt ck_iterated_vertex_count(int d, int l, int t) {
  check_degree(d, 1);
  if (l < 3) throw std::domain_error("iterated count formula requires l >= 3");
  if (t < 0) throw std::domain_error("iteration count t must be >= 0");
  if (t > l - 2)
    throw std::domain_error("iterated count formula is valid only for t <= l-2; "
                            "count by explicit construction beyond that");
  const BigInt leading =
      ipow(BigInt(d) * d - d + 1, static_cast<unsigned long>(t)) *
      ipow(d, static_cast<unsigned long>(l - t));
  const BigInt tail = parity_sign(l + 1) * ipow(d - 2, static_cast<unsigned long>(t)) *
                          BigInt(d - 1) * d +
                      parity_sign(l) * ipow(d, static_cast<unsigned long>(t + 1)) * (d + 1);
  return leading + half(tail);
}

BigInt ck4_count_closed_form(int d, int t) {
  check_degree(d, 1);
  if (t < 0) throw std::domain_error("iteration count t must be >= 0");
  BigInt prev = ipow(d, 4) + d;                                              // N_0
  BigInt curr = BigInt(d) * (d + 1) * (BigInt(d) * d * d - 2 * d * d + 3 * d - 1);  // N_1
  if (t == 0) return prev;
  for (int i = 2; i <= t; ++i) {
    BigInt next = (d - 1) * curr + prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

double ck4_count_radical_estimate(int d, int t) {
  check_degree(d, 1);
  if (t < 0) throw std::domain_error("iteration count t must be >= 0");
  const double root = std::sqrt(static_cast<double>(d) * d - 2.0 * d + 5.0);
  const double lambda_pos = (d - 1 + root) / 2.0;
  const double lambda_neg = (d - 1 - root) / 2.0;
  const double shared = 0.5 * d * (d + 1);
  const double ratio = (static_cast<double>(d) * d * d - 2.0 * d * d + 4.0 * d - 1.0) / root;
  const double base = static_cast<double>(d) * d - d + 1;
  const double alpha = shared * (base + ratio);
  const double beta = shared * (base - ratio);
  return alpha * std::pow(lambda_pos, t) + beta * std::pow(lambda_neg, t);
}

}  // namespace ckgraph
