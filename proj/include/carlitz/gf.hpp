#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carlitz {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// The coefficient field F_q, q = p^s. Elements are handled as canonical codes
// in [0, q): the code of c_0 + c_1 u + ... + c_{s-1} u^{s-1} is sum c_i p^i.
// Prime fields have no modulus; extension fields are F_p[u]/(modulus).
//
// Immutable once built. Share it through FieldPtr.
class Field {
 public:
  using Code = std::uint32_t;

  // Builds F_{p^s}. `modulus` lists c_0..c_s of a monic irreducible of degree
  // s over F_p; when omitted for s > 1 the lexicographically smallest one
  // (coefficient tuple read as a base-p integer) is chosen. Throws
  // ValidationError for a non-prime p, a bad modulus, or q >= 2^31.
  static FieldPtr create(std::uint32_t p, unsigned s,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return s_; }
  std::uint32_t order() const { return q_; }
  bool is_prime_field() const { return s_ == 1; }
  // c_0..c_s for extension fields, empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  // Throws DomainError for zero.
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const;

  std::vector<std::uint32_t> coords(Code a) const;
  Code from_coords(std::span<const std::uint32_t> coords) const;
  // Image of an integer in the prime subfield.
  Code from_integer(std::uint64_t n) const { return static_cast<Code>(n % p_); }

  // Integers 0..p-1 for prime fields, u-polynomials ("u^2+2*u+1") otherwise.
  std::string format(Code a) const;
  Code parse(std::string_view text) const;
  // Text of the modulus as a u-polynomial; empty for prime fields.
  std::string modulus_text() const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && s_ == other.s_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, unsigned s, std::vector<std::uint32_t> modulus);
  void build_tables();
  Code mul_slow(Code a, Code b) const;

  std::uint32_t p_;
  unsigned s_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  // Exp/log tables for extension fields small enough to tabulate.
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

bool is_prime(std::uint64_t n);

// A field element bound to its field; arithmetic between different fields
// throws ValidationError.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Field::Code code);

  static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
  static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }
  static FieldElement from_coords(FieldPtr field, std::span<const std::uint32_t> coords);
  static FieldElement parse(FieldPtr field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  Field::Code code() const { return code_; }
  std::vector<std::uint32_t> coords() const { return field_->coords(code_); }
  bool is_zero() const { return code_ == 0; }
  std::string to_string() const { return field_->format(code_); }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& rhs) const {
    return code_ == rhs.code_ && same_field(field_, rhs.field_);
  }

 private:
  void check_same(const FieldElement& rhs) const;

  FieldPtr field_;
  Field::Code code_;
};

}  // namespace carlitz
