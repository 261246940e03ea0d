#include "carlitz/bigint.hpp"

#include <algorithm>

#include "carlitz/error.hpp"

namespace carlitz {

BigInt parse_natural(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ValidationError("expected a nonnegative decimal integer, got '" +
                          std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::vector<std::uint64_t> to_digits(const BigInt& value, std::uint64_t radix) {
  if (value < 0) throw ValidationError("digit expansion of a negative integer");
  if (radix < 2) throw ValidationError("radix must be at least 2");
  std::vector<std::uint64_t> digits;
  BigInt rest = value;
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  while (rest != 0) {
    digits.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), radix));
  }
  if (digits.empty()) digits.push_back(0);
  return digits;
}

BigInt from_digits(const std::vector<std::uint64_t>& digits, std::uint64_t radix) {
  BigInt value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    value *= from_u64(radix);
    value += from_u64(*it);
  }
  return value;
}

BigInt from_u64(std::uint64_t value) {
  BigInt out;
  mpz_set_ui(out.get_mpz_t(), value);
  return out;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw ValidationError("integer " + to_decimal(value) + " does not fit in 64 bits");
  }
  return mpz_get_ui(value.get_mpz_t());
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt shift_digits_down(const BigInt& u, std::uint64_t radix, std::uint64_t s) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), u.get_mpz_t(), pow(from_u64(radix), s).get_mpz_t());
  return out;
}

}  // namespace carlitz
