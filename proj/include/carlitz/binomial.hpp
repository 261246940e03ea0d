#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "carlitz/bigint.hpp"
#include "carlitz/guardrails.hpp"
#include "carlitz/poly.hpp"
#include "carlitz/residue.hpp"

namespace carlitz {

inline constexpr std::uint64_t kDefaultMaxExactDegree = Guardrails{}.max_exact_degree;

// D_i = prod_{r<i} (T^{q^i} - T^{q^r}), D_0 = 1. deg D_i = i q^i, which must
// not exceed max_degree (GuardrailError otherwise).
Poly d_poly(unsigned i, const FieldPtr& field, std::uint64_t max_degree = kDefaultMaxExactDegree);

// deg n!_C = sum n_i i q^i over the base-q digits of n, saturating at
// UINT64_MAX.
std::uint64_t factorial_degree(std::uint64_t n, std::uint64_t q);

// n!_C = prod D_i^{n_i}.
Poly factorial_exact(std::uint64_t n, const FieldPtr& field,
                     std::uint64_t max_degree = kDefaultMaxExactDegree);

// a!_C / (b!_C (a-b)!_C) for b <= a, zero otherwise. A nonzero remainder
// raises IntegrityError.
Poly binom_exact(std::uint64_t a, std::uint64_t b, const FieldPtr& field,
                 std::uint64_t max_degree = kDefaultMaxExactDegree);

// Memoizing evaluator for exact values over one field; use it for sweeps.
// Not thread-safe.
class ExactCarlitz {
 public:
  explicit ExactCarlitz(FieldPtr field, std::uint64_t max_degree = kDefaultMaxExactDegree);

  const Poly& d(unsigned i);
  const Poly& factorial(std::uint64_t n);
  Poly binom(std::uint64_t a, std::uint64_t b);

 private:
  FieldPtr field_;
  std::uint64_t max_degree_;
  std::vector<Poly> d_;
  std::map<std::uint64_t, Poly> factorials_;
};

// Per-context data for Carlitz binomials of single base-q^h digits: D_i mod p
// for i < h, their inverses and discrete logs, and (when q^{2h} <= 2^22) a
// table of the class exponent of every digit binomial.
//
// Immutable after construction.
class DigitBinomCache {
 public:
  explicit DigitBinomCache(ResidueCtxPtr ctx, bool enable_memo = true);

  const ResidueCtx& ctx() const { return *ctx_; }
  const ResidueCtxPtr& ctx_ptr() const { return ctx_; }
  std::uint64_t radix() const { return ctx_->size(); }
  const std::vector<Residue>& d_mod() const { return d_mod_; }
  const std::vector<Residue>& d_inv() const { return d_inv_; }
  bool has_memo() const { return !memo_.empty(); }

  // binom(a, b)_C mod p for digits a, b < q^h; zero when b > a.
  Residue digit_binom_mod(std::uint64_t a, std::uint64_t b) const;
  // Same value, always via prod (D_i mod p)^{e_i} without the memo.
  Residue digit_binom_direct(std::uint64_t a, std::uint64_t b) const;
  // dlog of the digit binomial; empty when b > a.
  std::optional<std::uint64_t> digit_binom_exponent(std::uint64_t a, std::uint64_t b) const;

 private:
  void check_digits(std::uint64_t a, std::uint64_t b) const;
  // e_i = a_i - b_i - g_i over the base-q digits of a, b and g = a - b.
  std::vector<std::int64_t> exponents(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t exponent_from_logs(std::uint64_t a, std::uint64_t b) const;

  ResidueCtxPtr ctx_;
  std::vector<Residue> d_mod_;
  std::vector<Residue> d_inv_;
  std::vector<std::uint64_t> d_log_;
  std::vector<std::uint32_t> memo_;
};

// binom(n, m)_C mod p as the product of digit binomials over the base-q^h
// expansions; zero as soon as some digit of m exceeds the digit of n.
Residue binom_mod(const BigInt& n, const BigInt& m, const DigitBinomCache& cache);
Residue binom_mod_digits(std::span<const std::uint64_t> n_digits, std::span<const std::uint64_t> m_digits,
                         const DigitBinomCache& cache);
// dlog of binom(n, m)_C mod p, or empty for the zero class.
std::optional<std::uint64_t> binom_exponent_digits(std::span<const std::uint64_t> n_digits,
                                                   std::span<const std::uint64_t> m_digits,
                                                   const DigitBinomCache& cache);

// n!_C mod p = prod (D_i mod p)^{n_i}, valid for any n.
Residue factorial_mod(const BigInt& n, const ResidueCtx& ctx);

}  // namespace carlitz
