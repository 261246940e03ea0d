#include "carlitz/binomial.hpp"

#include <limits>

#include "carlitz/error.hpp"

namespace carlitz {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kMaxMemoEntries = std::uint64_t{1} << 22;
constexpr std::uint32_t kZeroClass = std::numeric_limits<std::uint32_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t d_degree(unsigned i, std::uint64_t q) {
  std::uint64_t qi = 1;
  for (unsigned k = 0; k < i; ++k) qi = sat_mul(qi, q);
  return sat_mul(i, qi);
}

void check_degree(std::uint64_t degree, std::uint64_t max_degree, const std::string& what) {
  if (degree > max_degree) {
    throw GuardrailError(what + " has degree " +
                         (degree == kSaturated ? std::string("beyond 2^64") : std::to_string(degree)) +
                         ", above the exact-degree limit " + std::to_string(max_degree));
  }
}

// T^{q^k} mod p for k = 0..count-1.
std::vector<Residue> frobenius_orbit(const ResidueCtx& ctx, std::size_t count) {
  std::vector<Residue> out;
  out.reserve(count);
  const BigInt q = from_u64(ctx.field()->order());
  out.push_back(ctx.reduce(Poly::variable(ctx.field())));
  while (out.size() < count) out.push_back(ctx.pow(out.back(), q));
  return out;
}

// D_i mod p for i = 0..count-1.
std::vector<Residue> d_mod_table(const ResidueCtx& ctx, std::size_t count) {
  auto t = frobenius_orbit(ctx, count);
  std::vector<Residue> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Residue d = ctx.one();
    for (std::size_t r = 0; r < i; ++r) d = d * (t[i] - t[r]);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::uint64_t> base_q_digits(std::uint64_t n, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  while (n) {
    out.push_back(n % q);
    n /= q;
  }
  return out;
}

}  // namespace

Poly d_poly(unsigned i, const FieldPtr& field, std::uint64_t max_degree) {
  const std::uint64_t q = field->order();
  check_degree(d_degree(i, q), max_degree, "D_" + std::to_string(i));
  Poly out = Poly::one(field);
  if (i == 0) return out;
  std::size_t qi = 1;
  for (unsigned k = 0; k < i; ++k) qi *= q;
  const Poly top = Poly::monomial(field, 1, qi);
  std::size_t qr = 1;
  for (unsigned r = 0; r < i; ++r, qr *= q) out *= top - Poly::monomial(field, 1, qr);
  return out;
}

std::uint64_t factorial_degree(std::uint64_t n, std::uint64_t q) {
  std::uint64_t total = 0;
  auto digits = base_q_digits(n, q);
  for (unsigned i = 0; i < digits.size(); ++i) {
    total = sat_add(total, sat_mul(digits[i], d_degree(i, q)));
  }
  return total;
}

Poly factorial_exact(std::uint64_t n, const FieldPtr& field, std::uint64_t max_degree) {
  ExactCarlitz exact(field, max_degree);
  return exact.factorial(n);
}

Poly binom_exact(std::uint64_t a, std::uint64_t b, const FieldPtr& field, std::uint64_t max_degree) {
  ExactCarlitz exact(field, max_degree);
  return exact.binom(a, b);
}

ExactCarlitz::ExactCarlitz(FieldPtr field, std::uint64_t max_degree)
    : field_(std::move(field)), max_degree_(max_degree) {}

const Poly& ExactCarlitz::d(unsigned i) {
  while (d_.size() <= i) d_.push_back(d_poly(static_cast<unsigned>(d_.size()), field_, max_degree_));
  return d_[i];
}

const Poly& ExactCarlitz::factorial(std::uint64_t n) {
  if (auto it = factorials_.find(n); it != factorials_.end()) return it->second;
  const std::uint64_t q = field_->order();
  check_degree(factorial_degree(n, q), max_degree_, std::to_string(n) + "!_C");
  Poly out = Poly::one(field_);
  auto digits = base_q_digits(n, q);
  for (unsigned i = 0; i < digits.size(); ++i) {
    for (std::uint64_t k = 0; k < digits[i]; ++k) out *= d(i);
  }
  return factorials_.emplace(n, std::move(out)).first->second;
}

Poly ExactCarlitz::binom(std::uint64_t a, std::uint64_t b) {
  if (b > a) return Poly::zero(field_);
  const Poly& numerator = factorial(a);
  const Poly denominator = factorial(b) * factorial(a - b);
  auto [quotient, remainder] = divmod(numerator, denominator);
  if (!remainder.is_zero()) {
    throw IntegrityError("Carlitz binomial (" + std::to_string(a) + ", " + std::to_string(b) +
                         ") is not integral: nonzero remainder");
  }
  return quotient;
}

DigitBinomCache::DigitBinomCache(ResidueCtxPtr ctx, bool enable_memo) : ctx_(std::move(ctx)) {
  const unsigned h = ctx_->degree();
  d_mod_ = d_mod_table(*ctx_, h);
  for (unsigned i = 0; i < h; ++i) {
    // D_i for i < h is coprime to a prime of degree h.
    if (d_mod_[i].is_zero()) {
      throw IntegrityError("D_" + std::to_string(i) + " vanishes modulo " + ctx_->prime().to_string());
    }
    d_inv_.push_back(ctx_->inverse(d_mod_[i]));
    d_log_.push_back(ctx_->dlog(d_mod_[i]));
  }

  const std::uint64_t radix = ctx_->size();
  if (enable_memo && radix <= kMaxMemoEntries / radix) {
    memo_.assign(radix * radix, kZeroClass);
    for (std::uint64_t a = 0; a < radix; ++a) {
      for (std::uint64_t b = 0; b <= a; ++b) {
        memo_[a * radix + b] = static_cast<std::uint32_t>(exponent_from_logs(a, b));
      }
    }
  }
}

void DigitBinomCache::check_digits(std::uint64_t a, std::uint64_t b) const {
  if (a >= radix() || b >= radix()) {
    throw ValidationError("digit binomial arguments must be below q^h = " + std::to_string(radix()));
  }
}

std::vector<std::int64_t> DigitBinomCache::exponents(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t q = ctx_->field()->order();
  std::uint64_t g = a - b;
  std::vector<std::int64_t> e(ctx_->degree());
  for (auto& ei : e) {
    ei = static_cast<std::int64_t>(a % q) - static_cast<std::int64_t>(b % q) - static_cast<std::int64_t>(g % q);
    a /= q;
    b /= q;
    g /= q;
  }
  return e;
}

std::uint64_t DigitBinomCache::exponent_from_logs(std::uint64_t a, std::uint64_t b) const {
  const auto n = static_cast<__int128>(ctx_->group_order());
  auto e = exponents(a, b);
  __int128 total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    total = (total + static_cast<__int128>(e[i]) * static_cast<__int128>(d_log_[i])) % n;
  }
  if (total < 0) total += n;
  return static_cast<std::uint64_t>(total);
}

Residue DigitBinomCache::digit_binom_direct(std::uint64_t a, std::uint64_t b) const {
  check_digits(a, b);
  if (b > a) return ctx_->zero();
  auto e = exponents(a, b);
  Residue out = ctx_->one();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) {
      out = out * ctx_->pow(d_mod_[i], e[i]);
    } else if (e[i] < 0) {
      out = out * ctx_->pow(d_inv_[i], -e[i]);
    }
  }
  return out;
}

Residue DigitBinomCache::digit_binom_mod(std::uint64_t a, std::uint64_t b) const {
  check_digits(a, b);
  if (b > a) return ctx_->zero();
  if (has_memo()) return ctx_->generator_power(memo_[a * radix() + b]);
  return digit_binom_direct(a, b);
}

std::optional<std::uint64_t> DigitBinomCache::digit_binom_exponent(std::uint64_t a, std::uint64_t b) const {
  check_digits(a, b);
  if (b > a) return std::nullopt;
  if (has_memo()) return memo_[a * radix() + b];
  return exponent_from_logs(a, b);
}

Residue binom_mod_digits(std::span<const std::uint64_t> n_digits, std::span<const std::uint64_t> m_digits,
                         const DigitBinomCache& cache) {
  const auto& ctx = cache.ctx();
  Residue out = ctx.one();
  for (std::size_t i = 0; i < m_digits.size(); ++i) {
    const std::uint64_t mi = m_digits[i];
    const std::uint64_t ni = i < n_digits.size() ? n_digits[i] : 0;
    if (mi > ni) return ctx.zero();
    if (mi == 0 || mi == ni) continue;
    out = out * cache.digit_binom_mod(ni, mi);
  }
  return out;
}

std::optional<std::uint64_t> binom_exponent_digits(std::span<const std::uint64_t> n_digits,
                                                   std::span<const std::uint64_t> m_digits,
                                                   const DigitBinomCache& cache) {
  const std::uint64_t n = cache.ctx().group_order();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < m_digits.size(); ++i) {
    const std::uint64_t mi = m_digits[i];
    const std::uint64_t ni = i < n_digits.size() ? n_digits[i] : 0;
    if (mi > ni) return std::nullopt;
    if (mi == 0 || mi == ni) continue;
    total += *cache.digit_binom_exponent(ni, mi);
    if (total >= n) total -= n;
  }
  return total;
}

Residue binom_mod(const BigInt& n, const BigInt& m, const DigitBinomCache& cache) {
  if (n < 0 || m < 0) throw ValidationError("binomial arguments must be nonnegative");
  if (m > n) return cache.ctx().zero();
  auto nd = to_digits(n, cache.radix());
  auto md = to_digits(m, cache.radix());
  return binom_mod_digits(nd, md, cache);
}

Residue factorial_mod(const BigInt& n, const ResidueCtx& ctx) {
  auto digits = to_digits(n, ctx.field()->order());
  auto d = d_mod_table(ctx, digits.size());
  Residue out = ctx.one();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] != 0) out = out * ctx.pow(d[i], from_u64(digits[i]));
  }
  return out;
}

}  // namespace carlitz
