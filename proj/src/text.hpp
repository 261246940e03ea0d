#pragma once

// Shared scanner for the u-polynomial / T-polynomial text grammar.

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "carlitz/error.hpp"
#include "carlitz/gf.hpp"

namespace carlitz::text {

class Cursor {
 public:
  explicit Cursor(std::string_view input) : original_(input) {
    for (char c : input) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  // Decimal integer reduced modulo `modulus`.
  std::uint64_t uint_mod(std::uint64_t modulus) {
    if (!at_digit()) fail("expected an integer");
    std::uint64_t value = 0;
    while (at_digit()) {
      value = (value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % modulus;
    }
    return value;
  }

  std::uint64_t exponent() {
    if (!at_digit()) fail("expected an exponent");
    std::uint64_t value = 0;
    while (at_digit()) {
      auto d = static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("exponent too large");
      value = value * 10 + d;
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("syntax error in '" + std::string(original_) + "' at offset " +
                          std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view original_;
  std::string text_;
  std::size_t pos_ = 0;
};

// One u-term: uint | uint '*' umono | umono, added into `coords`.
inline void parse_uterm(Cursor& in, const Field& field, std::vector<std::uint64_t>& coords) {
  const std::uint64_t p = field.characteristic();
  std::uint64_t coeff = 1;
  bool have_coeff = false;
  if (in.at_digit()) {
    coeff = in.uint_mod(p);
    have_coeff = true;
    if (!in.accept('*')) {
      coords[0] = (coords[0] + coeff) % p;
      return;
    }
  }
  if (!in.accept('u')) in.fail(have_coeff ? "expected 'u' after '*'" : "expected a coefficient");
  std::uint64_t k = 1;
  if (in.accept('^')) k = in.exponent();
  if (k >= field.degree()) {
    throw ValidationError("coefficient outside field: u^" + std::to_string(k) +
                          " has degree >= " + std::to_string(field.degree()));
  }
  coords[k] = (coords[k] + coeff) % p;
}

// upoly := uterm ('+' uterm)*, stopping before any character that cannot
// continue it (')' or end of input).
inline Field::Code parse_upoly(Cursor& in, const Field& field) {
  std::vector<std::uint64_t> coords(field.degree(), 0);
  parse_uterm(in, field, coords);
  while (in.accept('+')) parse_uterm(in, field, coords);
  std::vector<std::uint32_t> narrow(coords.begin(), coords.end());
  return field.from_coords(narrow);
}

}  // namespace carlitz::text
