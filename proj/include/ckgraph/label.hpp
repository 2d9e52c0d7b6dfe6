#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ckgraph {

// Alphabet symbols are small nonnegative integers. A digraph over degree
// parameter d uses the alphabet {0,...,d} (Kautz families) or {0,...,d-1}
// (De Bruijn).
using Symbol = int;

// Orientation mark assigned to an ordered pair of distinct symbols of {0,1,2}.
enum class Sign : std::uint8_t { plus, minus };

char to_char(Sign s);

// A vertex label: a nonempty sequence of symbols.
//
// Text form: contiguous digits when every symbol fits in one digit ("2013"),
// comma-separated decimal integers otherwise ("10,2,10,0"). parse() accepts
// both forms.
class Label {
 public:
  Label() = default;
  explicit Label(std::vector<Symbol> symbols) : syms_(std::move(symbols)) {}
  Label(std::initializer_list<Symbol> symbols) : syms_(symbols) {}

  // Throws std::invalid_argument on malformed text.
  static Label parse(std::string_view text);
  static std::optional<Label> try_parse(std::string_view text);

  std::size_t size() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  Symbol operator[](std::size_t i) const { return syms_[i]; }
  Symbol front() const { return syms_.front(); }
  Symbol back() const { return syms_.back(); }
  const std::vector<Symbol>& symbols() const { return syms_; }

  auto begin() const { return syms_.begin(); }
  auto end() const { return syms_.end(); }

  std::string str() const;

  auto operator<=>(const Label&) const = default;

 private:
  std::vector<Symbol> syms_;
};

// True when no two consecutive symbols are equal. Throws
// std::invalid_argument if seq is empty or contains a symbol outside {0..d}.
bool is_kautz_label(const Label& seq, int d);

// Kautz validity plus first != last. The first/last condition is vacuous for
// length-1 labels, which are therefore valid.
bool is_cyclic_kautz_label(const Label& seq, int d);

// Cyclic left shift by k positions (k reduced modulo the length, negative k
// allowed). A cyclic-Kautz-valid input yields a cyclic-Kautz-valid output.
Label rotate(const Label& seq, long long k);

// Replace the symbol at pos (0-based) with x. x must differ from both cyclic
// neighbors of the position; otherwise throws std::invalid_argument.
Label swap_symbol(const Label& seq, std::size_t pos, Symbol x);

// Sign of an ordered pair of distinct symbols of {0,1,2}:
// (0,1), (1,2), (2,0) are plus; the reversed pairs are minus.
// Throws std::domain_error when a == b or a symbol is outside {0,1,2}.
Sign sgn(Symbol a, Symbol b);

// The cyclic sign sequence of a label over {0,1,2}: position i holds
// sgn(v_i, v_{i+1}) and the last position wraps around to the first symbol.
struct Imprint {
  std::vector<Sign> signs;

  int plus_count() const;
  int minus_count() const { return static_cast<int>(signs.size()) - plus_count(); }
  std::string str() const;

  bool operator==(const Imprint&) const = default;
};

// Defined for cyclic-Kautz-valid labels over {0,1,2} of length >= 2.
// Throws std::domain_error on other alphabets or length-1 labels.
Imprint imprint(const Label& seq);

// Inverse mapping: the label over {0,1,2} determined by its first symbol and
// imprint. Throws std::invalid_argument when the wrap-around sign is
// inconsistent (no such label exists).
Label label_from_imprint(Symbol first, const Imprint& im);

}  // namespace ckgraph
