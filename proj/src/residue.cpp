#include "carlitz/residue.hpp"

#include <cmath>
#include <limits>

#include "carlitz/error.hpp"

namespace carlitz {

namespace {

constexpr std::uint64_t kMaxBabySteps = std::uint64_t{1} << 20;
constexpr std::uint64_t kNoLog = std::numeric_limits<std::uint64_t>::max();

}  // namespace

Residue Residue::operator+(const Residue& rhs) const { return ctx_->add(*this, rhs); }
Residue Residue::operator-(const Residue& rhs) const { return ctx_->sub(*this, rhs); }
Residue Residue::operator*(const Residue& rhs) const { return ctx_->mul(*this, rhs); }

ResidueCtxPtr ResidueCtx::create(const Poly& prime, const std::optional<Poly>& primitive_root,
                                 ResidueOptions options) {
  const auto deg = prime.degree();
  if (!deg || *deg == 0) throw ValidationError("prime must have degree >= 1");
  if (!prime.is_monic()) throw ValidationError("prime must be monic");
  if (!is_irreducible(prime)) throw ValidationError("prime is reducible");

  const unsigned h = static_cast<unsigned>(*deg);
  const std::uint64_t q = prime.field()->order();
  std::uint64_t size = 1;
  for (unsigned i = 0; i < h; ++i) {
    if (size > (std::uint64_t{1} << 63) / q) {
      throw ValidationError("residue field of size " + std::to_string(q) + "^" + std::to_string(h) +
                            " is too large");
    }
    size *= q;
  }

  std::shared_ptr<ResidueCtx> ctx(new ResidueCtx(prime, h, size, options));
  ctx->factors_ = factorize(ctx->group_order());
  if (primitive_root) {
    if (!same_field(primitive_root->field(), prime.field())) {
      throw ValidationError("primitive root is over a different field than the prime");
    }
    Residue candidate = ctx->reduce(*primitive_root);
    if (candidate.is_zero()) throw ValidationError("primitive root candidate is zero modulo the prime");
    if (!ctx->is_primitive(candidate)) {
      throw ValidationError("primitive root candidate " + primitive_root->to_string() + " has order " +
                            std::to_string(ctx->order(candidate)) + ", not " +
                            std::to_string(ctx->group_order()));
    }
    ctx->root_ = std::move(candidate);
  } else {
    ctx->root_ = ctx->search_primitive_root();
  }
  ctx->build_tables();
  return ctx;
}

ResidueCtx::ResidueCtx(Poly prime, unsigned h, std::uint64_t size, ResidueOptions options)
    : prime_(std::move(prime)), h_(h), size_(size), options_(options) {}

void ResidueCtx::build_tables() {
  const std::uint64_t n = group_order();
  if (n <= options_.dlog_table_threshold) {
    power_.resize(n);
    dlog_.assign(size_, kNoLog);
    Residue x = one();
    for (std::uint64_t j = 0; j < n; ++j) {
      const auto c = code(x);
      power_[j] = c;
      dlog_[c] = j;
      x = mul(x, *root_);
    }
    return;
  }
  baby_steps_ = std::min<std::uint64_t>(
      kMaxBabySteps, static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
  Residue x = one();
  for (std::uint64_t j = 0; j < baby_steps_; ++j) {
    baby_.emplace(code(x), j);
    x = mul(x, *root_);
  }
}

void ResidueCtx::check(const Residue& a) const {
  if (a.ctx_ != this) throw ValidationError("residue belongs to a different context");
}

Residue ResidueCtx::reduce(const Poly& a) const {
  if (!same_field(a.field(), field())) throw ValidationError("polynomial over a different field");
  return Residue(this, rem(a, prime_));
}

std::uint64_t ResidueCtx::code(const Residue& a) const {
  check(a);
  const std::uint64_t q = field()->order();
  std::uint64_t out = 0;
  const auto& c = a.rep().coeffs();
  for (std::size_t i = c.size(); i-- > 0;) out = out * q + c[i];
  return out;
}

Residue ResidueCtx::from_code(std::uint64_t code) const {
  if (code >= size_) throw ValidationError("residue code outside [0, q^h)");
  const std::uint64_t q = field()->order();
  std::vector<Poly::Code> coeffs(h_);
  for (unsigned i = 0; i < h_; ++i) {
    coeffs[i] = static_cast<Poly::Code>(code % q);
    code /= q;
  }
  return Residue(this, Poly(field(), std::move(coeffs)));
}

Residue ResidueCtx::add(const Residue& a, const Residue& b) const {
  check(a);
  check(b);
  return Residue(this, a.rep() + b.rep());
}

Residue ResidueCtx::sub(const Residue& a, const Residue& b) const {
  check(a);
  check(b);
  return Residue(this, a.rep() - b.rep());
}

Residue ResidueCtx::mul(const Residue& a, const Residue& b) const {
  check(a);
  check(b);
  return Residue(this, rem(a.rep() * b.rep(), prime_));
}

Residue ResidueCtx::inverse(const Residue& a) const {
  check(a);
  if (a.is_zero()) throw DomainError("inverse of zero residue");
  auto eg = xgcd(a.rep(), prime_);
  return Residue(this, rem(eg.s, prime_));
}

Residue ResidueCtx::pow_u64(const Residue& a, std::uint64_t e) const {
  Residue result = one();
  Residue base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

Residue ResidueCtx::pow(const Residue& a, const BigInt& e) const {
  check(a);
  if (a.is_zero()) {
    if (e < 0) throw DomainError("zero residue raised to a negative power");
    return e == 0 ? one() : zero();
  }
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), e.get_mpz_t(), from_u64(group_order()).get_mpz_t());
  return pow_u64(a, to_u64(r));
}

Residue ResidueCtx::pow(const Residue& a, std::int64_t e) const {
  BigInt big;
  mpz_set_si(big.get_mpz_t(), e);
  return pow(a, big);
}

Residue ResidueCtx::generator_power(std::int64_t j) const {
  const auto n = static_cast<std::int64_t>(group_order());
  std::int64_t r = j % n;
  if (r < 0) r += n;
  if (!power_.empty()) return from_code(power_[static_cast<std::size_t>(r)]);
  return pow_u64(*root_, static_cast<std::uint64_t>(r));
}

std::uint64_t ResidueCtx::order(const Residue& a) const {
  check(a);
  if (a.is_zero()) throw DomainError("order of zero residue");
  std::uint64_t ord = group_order();
  for (const auto& [l, k] : factors_) {
    for (unsigned i = 0; i < k && pow_u64(a, ord / l).is_one(); ++i) ord /= l;
  }
  return ord;
}

bool ResidueCtx::is_primitive(const Residue& a) const {
  if (a.is_zero()) return false;
  for (const auto& f : factors_) {
    if (pow_u64(a, group_order() / f.prime).is_one()) return false;
  }
  return true;
}

Residue ResidueCtx::search_primitive_root() const {
  for (std::uint64_t c = 1; c < size_; ++c) {
    Residue candidate = from_code(c);
    if (is_primitive(candidate)) return candidate;
  }
  throw IntegrityError("no primitive root found modulo " + prime_.to_string());
}

std::uint64_t ResidueCtx::dlog(const Residue& a) const {
  check(a);
  if (a.is_zero()) throw DomainError("zero class has no discrete logarithm");
  return dlog_of_code(code(a));
}

std::uint64_t ResidueCtx::dlog_of_code(std::uint64_t c) const {
  if (c == 0) throw DomainError("zero class has no discrete logarithm");
  if (c >= size_) throw ValidationError("residue code outside [0, q^h)");
  if (!dlog_.empty()) return dlog_[c];

  const std::uint64_t n = group_order();
  const Residue giant = inverse(pow_u64(*root_, baby_steps_));
  Residue gamma = from_code(c);
  for (std::uint64_t i = 0; i * baby_steps_ < n + baby_steps_; ++i) {
    auto it = baby_.find(code(gamma));
    if (it != baby_.end()) return (i * baby_steps_ + it->second) % n;
    gamma = mul(gamma, giant);
  }
  throw IntegrityError("discrete logarithm not found; primitive root is not a generator");
}

}  // namespace carlitz
