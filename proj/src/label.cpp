#include "ckgraph/label.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace ckgraph {

char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

Label Label::parse(std::string_view text) {
  auto parsed = try_parse(text);
  if (!parsed)
    throw std::invalid_argument("malformed label text: \"" + std::string(text) + "\"");
  return *std::move(parsed);
}

std::optional<Label> Label::try_parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::vector<Symbol> syms;
  if (text.find(',') == std::string_view::npos) {
    syms.reserve(text.size());
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
      syms.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view token =
          text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        return std::nullopt;
      syms.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return Label(std::move(syms));
}

std::string Label::str() const {
  bool single_digit = true;
  for (Symbol s : syms_)
    if (s > 9) single_digit = false;
  std::string out;
  if (single_digit) {
    out.reserve(syms_.size());
    for (Symbol s : syms_) out.push_back(static_cast<char>('0' + s));
  } else {
    for (std::size_t i = 0; i < syms_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(syms_[i]);
    }
  }
  return out;
}

static void check_alphabet(const Label& seq, int d) {
  if (seq.empty()) throw std::invalid_argument("label must be nonempty");
  for (Symbol s : seq)
    if (s < 0 || s > d)
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " outside alphabet {0.." + std::to_string(d) + "}");
}

bool is_kautz_label(const Label& seq, int d) {
  check_alphabet(seq, d);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i] == seq[i + 1]) return false;
  return true;
}

bool is_cyclic_kautz_label(const Label& seq, int d) {
  if (!is_kautz_label(seq, d)) return false;
  return seq.size() == 1 || seq.front() != seq.back();
}

Label rotate(const Label& seq, long long k) {
  const auto n = static_cast<long long>(seq.size());
  if (n == 0) throw std::invalid_argument("cannot rotate an empty label");
  long long shift = k % n;
  if (shift < 0) shift += n;
  std::vector<Symbol> out;
  out.reserve(seq.size());
  for (long long i = 0; i < n; ++i) out.push_back(seq[static_cast<std::size_t>((i + shift) % n)]);
  return Label(std::move(out));
}

Label swap_symbol(const Label& seq, std::size_t pos, Symbol x) {
  const std::size_t n = seq.size();
  if (pos >= n) throw std::out_of_range("swap position out of range");
  const Symbol prev = seq[(pos + n - 1) % n];
  const Symbol next = seq[(pos + 1) % n];
  if (x == prev || x == next)
    throw std::invalid_argument("swap symbol " + std::to_string(x) +
                                " collides with a cyclic neighbor");
  std::vector<Symbol> out = seq.symbols();
  out[pos] = x;
  return Label(std::move(out));
}

Sign sgn(Symbol a, Symbol b) {
  if (a < 0 || a > 2 || b < 0 || b > 2)
    throw std::domain_error("sgn is defined only on the alphabet {0,1,2}");
  if (a == b) throw std::domain_error("sgn requires distinct symbols");
  return (b - a + 3) % 3 == 1 ? Sign::plus : Sign::minus;
}

int Imprint::plus_count() const {
  int count = 0;
  for (Sign s : signs)
    if (s == Sign::plus) ++count;
  return count;
}

std::string Imprint::str() const {
  std::string out;
  out.reserve(signs.size());
  for (Sign s : signs) out.push_back(to_char(s));
  return out;
}

Imprint imprint(const Label& seq) {
  const std::size_t n = seq.size();
  if (n < 2) throw std::domain_error("imprint requires a label of length >= 2");
  for (Symbol s : seq)
    if (s < 0 || s > 2)
      throw std::domain_error("imprint is defined only over the alphabet {0,1,2}");
  Imprint im;
  im.signs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) im.signs.push_back(sgn(seq[i], seq[(i + 1) % n]));
  return im;
}

Label label_from_imprint(Symbol first, const Imprint& im) {
  if (first < 0 || first > 2)
    throw std::domain_error("first symbol must lie in {0,1,2}");
  const std::size_t n = im.signs.size();
  if (n < 2) throw std::invalid_argument("imprint must have length >= 2");
  std::vector<Symbol> syms;
  syms.reserve(n);
  syms.push_back(first);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Symbol step = im.signs[i] == Sign::plus ? 1 : 2;
    syms.push_back((syms.back() + step) % 3);
  }
  if (syms.back() == first || sgn(syms.back(), first) != im.signs.back())
    throw std::invalid_argument("imprint wrap-around sign is inconsistent with first symbol");
  return Label(std::move(syms));
}

}  // namespace ckgraph
