#pragma once

#include <cstdint>
#include <vector>

#include "carlitz/bigint.hpp"
#include "carlitz/binomial.hpp"
#include "carlitz/guardrails.hpp"

namespace carlitz {

// A finite word over the digit alphabet {0, ..., q^h - 1}; digit 0 is the
// least significant. Words are never empty.
class Word {
 public:
  // Throws ValidationError for an empty word or a digit >= q^h.
  Word(std::vector<std::uint64_t> digits, std::uint64_t q, unsigned h);

  const std::vector<std::uint64_t>& digits() const { return digits_; }
  std::uint64_t q() const { return q_; }
  unsigned h() const { return h_; }
  // q^h
  std::uint64_t radix() const { return radix_; }
  // Number of letters.
  std::size_t degree() const { return digits_.size(); }

  bool operator==(const Word&) const = default;

 private:
  std::vector<std::uint64_t> digits_;
  std::uint64_t q_;
  unsigned h_;
  std::uint64_t radix_;
};

// sum_i digits[i] (q^h)^i
BigInt word_z(const Word& w);

// Concatenation a then b; z(a * b) = z(a) + q^{h deg a} z(b).
Word word_concat(const Word& a, const Word& b);

// The word spelling u in base `radix` (a single 0 for u = 0).
Word word_of(const BigInt& u, std::uint64_t q, unsigned h);

// u with its s lowest base-`radix` digits dropped.
BigInt nat_tail(const BigInt& u, std::uint64_t s, std::uint64_t radix);

// Digits s..s+r of u, re-valued from position 0.
BigInt nat_window(const BigInt& u, std::uint64_t r, std::uint64_t s, std::uint64_t radix);

// All u in [0, z(w)] with binom(z(w), u)_C = g^j mod p, ascending. j is taken
// mod q^h - 1. Throws GuardrailError when z(w) exceeds max_enumeration.
std::vector<std::uint64_t> enumerate_class_set(const Word& w, std::int64_t j, const DigitBinomCache& cache,
                                               std::uint64_t max_enumeration = Guardrails{}.max_enumeration);

}  // namespace carlitz
