#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "carlitz/bigint.hpp"
#include "carlitz/factor.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

class ResidueCtx;
using ResidueCtxPtr = std::shared_ptr<const ResidueCtx>;

// An element of A/pA, held by its representative of degree < h. A Residue
// refers to its context without owning it; keep the ResidueCtxPtr alive.
class Residue {
 public:
  const ResidueCtx& ctx() const { return *ctx_; }
  const Poly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.is_one(); }
  std::string to_string() const { return rep_.to_string(); }

  Residue operator+(const Residue& rhs) const;
  Residue operator-(const Residue& rhs) const;
  Residue operator*(const Residue& rhs) const;
  bool operator==(const Residue& rhs) const { return ctx_ == rhs.ctx_ && rep_ == rhs.rep_; }

 private:
  friend class ResidueCtx;
  Residue(const ResidueCtx* ctx, Poly rep) : ctx_(ctx), rep_(std::move(rep)) {}

  const ResidueCtx* ctx_;
  Poly rep_;
};

struct ResidueOptions {
  // Full power/dlog tables are built when q^h - 1 is at most this;
  // baby-step giant-step is used above it.
  std::uint64_t dlog_table_threshold = std::uint64_t{1} << 20;
};

// The residue field A/pA for a monic prime p of degree h, with a primitive
// root g of the cyclic group (A/pA)^x of order q^h - 1.
//
// Residues have a canonical code sum c_i q^i over the coefficient codes of
// their representative, so q^h must stay below 2^63.
//
// Built eagerly and immutable afterwards; safe to share across threads.
class ResidueCtx {
 public:
  // Throws ValidationError when `prime` is not monic irreducible, or when a
  // supplied primitive root does not have full order.
  static ResidueCtxPtr create(const Poly& prime, const std::optional<Poly>& primitive_root = std::nullopt,
                              ResidueOptions options = {});

  ResidueCtx(const ResidueCtx&) = delete;
  ResidueCtx& operator=(const ResidueCtx&) = delete;

  const FieldPtr& field() const { return prime_.field(); }
  const Poly& prime() const { return prime_; }
  unsigned degree() const { return h_; }
  // q^h, the number of residues (and the digit radix of the Lucas expansion).
  std::uint64_t size() const { return size_; }
  // q^h - 1
  std::uint64_t group_order() const { return size_ - 1; }
  const std::vector<PrimePower>& group_order_factors() const { return factors_; }
  const Residue& primitive_root() const { return *root_; }
  bool has_dlog_table() const { return !dlog_.empty(); }

  Residue reduce(const Poly& a) const;
  Residue zero() const { return Residue(this, Poly(field())); }
  Residue one() const { return Residue(this, Poly::one(field())); }
  std::uint64_t code(const Residue& a) const;
  Residue from_code(std::uint64_t code) const;

  Residue add(const Residue& a, const Residue& b) const;
  Residue sub(const Residue& a, const Residue& b) const;
  Residue mul(const Residue& a, const Residue& b) const;
  // Throws DomainError for zero.
  Residue inverse(const Residue& a) const;
  // Negative exponents need a unit. Exponents of units are reduced mod q^h - 1.
  Residue pow(const Residue& a, const BigInt& e) const;
  Residue pow(const Residue& a, std::int64_t e) const;
  // g^j for any integer j; j is reduced mod q^h - 1.
  Residue generator_power(std::int64_t j) const;

  // Exact multiplicative order. Throws DomainError for zero.
  std::uint64_t order(const Residue& a) const;
  // The j in [0, q^h - 2] with g^j = a. Zero has no logarithm: DomainError.
  std::uint64_t dlog(const Residue& a) const;
  // dlog of D_i-style table entries without building a Residue.
  std::uint64_t dlog_of_code(std::uint64_t code) const;

  // First residue of full order scanning nonzero representatives by
  // (degree, coefficient code), i.e. by ascending canonical code.
  Residue search_primitive_root() const;

 private:
  ResidueCtx(Poly prime, unsigned h, std::uint64_t size, ResidueOptions options);
  void check(const Residue& a) const;
  bool is_primitive(const Residue& a) const;
  Residue pow_u64(const Residue& a, std::uint64_t e) const;
  void build_tables();

  Poly prime_;
  unsigned h_;
  std::uint64_t size_;
  ResidueOptions options_;
  std::vector<PrimePower> factors_;
  std::optional<Residue> root_;
  // Full tables: power_[j] = code of g^j, dlog_[code] = j.
  std::vector<std::uint64_t> power_;
  std::vector<std::uint64_t> dlog_;
  // Baby-step table for contexts too large to tabulate.
  std::unordered_map<std::uint64_t, std::uint64_t> baby_;
  std::uint64_t baby_steps_ = 0;
};

}  // namespace carlitz
