#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace carlitz {

using BigInt = mpz_class;

// Parses a nonnegative decimal integer. Throws ValidationError on anything
// else (signs, blanks, other bases).
BigInt parse_natural(std::string_view text);

std::string to_decimal(const BigInt& value);

// Little-endian base-`radix` digits. Zero yields the single digit {0}.
std::vector<std::uint64_t> to_digits(const BigInt& value, std::uint64_t radix);

BigInt from_digits(const std::vector<std::uint64_t>& digits, std::uint64_t radix);

BigInt from_u64(std::uint64_t value);

// Throws ValidationError when the value is negative or does not fit.
std::uint64_t to_u64(const BigInt& value);

BigInt pow(const BigInt& base, std::uint64_t exponent);

// floor(u / radix^s)
BigInt shift_digits_down(const BigInt& u, std::uint64_t radix, std::uint64_t s);

}  // namespace carlitz
