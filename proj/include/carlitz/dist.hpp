#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "carlitz/bigint.hpp"
#include "carlitz/binomial.hpp"
#include "carlitz/guardrails.hpp"

namespace carlitz {

// An element of Z[x]/(x^N - 1) with N = q^h - 1 and nonnegative
// arbitrary-precision coefficients; coefficient j counts the class g^j.
class CountPoly {
 public:
  explicit CountPoly(std::size_t len);
  explicit CountPoly(std::vector<BigInt> coeffs);

  static CountPoly one(std::size_t len);
  // c x^j with j reduced mod len.
  static CountPoly monomial(std::size_t len, std::int64_t j, const BigInt& c);

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t j) const { return coeffs_[j]; }
  BigInt& operator[](std::size_t j) { return coeffs_[j]; }
  // Coefficient of x^j for any integer j (period N).
  const BigInt& at(std::int64_t j) const;
  // Value at x = 1, i.e. the sum of coefficients.
  BigInt at_one() const;

  bool operator==(const CountPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  // "72 + 18x^4 + 90x^6"; "0" when all coefficients vanish.
  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
};

// Product in Z[x]/(x^N - 1): exponents add mod N. Throws ValidationError on a
// length mismatch.
CountPoly cyclic_mul(const CountPoly& a, const CountPoly& b);
CountPoly cyclic_pow(const CountPoly& a, std::uint64_t e);

// c_j(n): how often each digit j < q^h occurs in the base-q^h expansion of n.
// n = 0 counts as the single digit 0.
struct DigitCounts {
  std::vector<std::uint64_t> counts;
  std::uint64_t total() const;
};
DigitCounts digit_counts(const BigInt& n, std::uint64_t radix);

using BaseTable = std::vector<CountPoly>;

// G_d for one digit d < q^h, scanning m = 0..d.
CountPoly base_poly(std::uint64_t d, const DigitBinomCache& cache);
// G_0 .. G_{q^h - 1}.
BaseTable base_table(const DigitBinomCache& cache);

// G_n = prod_d G_d^{c_d(n)} in Z[x]/(x^N - 1). The first overload builds only
// the base polynomials for digits that occur in n.
CountPoly gn_fast(const BigInt& n, const DigitBinomCache& cache);
CountPoly gn_fast(const BigInt& n, const BaseTable& table);

// G_n(1) via the evaluation homomorphism: prod_d G_d(1)^{c_d(n)}.
BigInt units_by_evaluation(const DigitCounts& counts, const BaseTable& table);

// The same product expanded in Z[x] without reduction, for reproducing the
// explicit division by x^N - 1.
std::vector<BigInt> expanded_product(const BigInt& n, const BaseTable& table);

struct PlainDivMod {
  std::vector<BigInt> quotient;
  std::vector<BigInt> remainder;  // exactly N coefficients
};
// p = (x^N - 1) quotient + remainder with deg remainder < N.
PlainDivMod divide_by_x_pow_minus_one(const std::vector<BigInt>& p, std::size_t len);

enum class Method { fast, brute };
std::string_view method_name(Method m);
Method parse_method(std::string_view text);

struct Distribution {
  BigInt n;
  Method method = Method::fast;
  CountPoly counts{1};
  // Number of m in [0, n] with binom(n, m)_C = 0 mod p.
  BigInt zero_count;
  // Canonical text of g^j for j = 0..N-1.
  std::vector<std::string> residue_labels;

  bool operator==(const Distribution&) const = default;
};

// Classifies every m in [0, n] directly. n must not exceed max_n.
Distribution distribution_brute(const BigInt& n, const DigitBinomCache& cache,
                                std::uint64_t max_n = Guardrails{}.max_brute_n);

// Fast mode derives zero_count as (n + 1) - G_n(1). `table` is used when
// given (it must belong to the same context), otherwise only the needed base
// polynomials are built.
Distribution distribution(const BigInt& n, const DigitBinomCache& cache, Method method,
                          const BaseTable* table = nullptr, const Guardrails& limits = {});

std::vector<std::string> residue_labels(const ResidueCtx& ctx);

}  // namespace carlitz
