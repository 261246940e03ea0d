#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carlitz/bigint.hpp"
#include "carlitz/gf.hpp"

namespace carlitz {

// An element of A = F_q[T], stored densely: coeffs()[i] is the code of the
// coefficient of T^i, with no trailing zeros. The zero polynomial has no
// coefficients and no degree (degree() is empty rather than -1).
class Poly {
 public:
  using Code = Field::Code;

  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Code> coeffs);

  static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
  static Poly one(FieldPtr field) { return constant(std::move(field), 1); }
  static Poly constant(FieldPtr field, Code c);
  static Poly monomial(FieldPtr field, Code c, std::size_t power);
  // The indeterminate T.
  static Poly variable(FieldPtr field) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field() const { return field_; }
  const std::vector<Code>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  Code coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Code leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return leading() == 1; }
  Poly monic() const;
  Poly scaled(Code c) const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  bool operator==(const Poly& rhs) const {
    return coeffs_ == rhs.coeffs_ && same_field(field_, rhs.field_);
  }

  // Canonical text: descending powers, unit coefficients elided, multi-term
  // extension coefficients parenthesized ("(u+1)*T^2+u*T+u").
  std::string to_string() const;

 private:
  void trim();
  void check_same(const Poly& rhs) const;

  FieldPtr field_;
  std::vector<Code> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

// a = quotient * b + remainder with deg remainder < deg b.
// Throws DomainError when b is zero.
DivMod divmod(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);

// Monic gcd. Throws DomainError when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly gcd;  // monic
  Poly s;
  Poly t;    // s*a + t*b = gcd
};
ExtendedGcd xgcd(const Poly& a, const Poly& b);

// base^e mod m by square-and-multiply. Throws DomainError when m is zero or
// a negative exponent is given.
Poly powmod(const Poly& base, const BigInt& e, const Poly& m);

// Rabin's test. Throws ValidationError for constant input.
bool is_irreducible(const Poly& f);

// First monic irreducible of degree h, scanning T^h + c(T) with the lower
// coefficients c_0..c_{h-1} taken in ascending order of their canonical code
// sum c_i q^i.
Poly find_irreducible(unsigned h, const FieldPtr& field);

// Grammar:
//   poly  := term ('+' term)*
//   term  := coeff | coeff '*' mono | mono
//   mono  := 'T' ('^' uint)?
//   coeff := uint | '(' upoly ')' | umono
// where upoly is the same grammar over the generator u. Whitespace is
// ignored and integer coefficients are reduced mod p.
Poly parse_poly(std::string_view text, const FieldPtr& field);

}  // namespace carlitz
