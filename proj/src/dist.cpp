#include "carlitz/dist.hpp"

#include <algorithm>
#include <functional>

#include "carlitz/error.hpp"

namespace carlitz {

namespace {

constexpr std::uint64_t kMaxTableRadix = 4096;

}  // namespace

CountPoly::CountPoly(std::size_t len) : coeffs_(len) {
  if (len == 0) throw ValidationError("count polynomial needs a positive length");
}

CountPoly::CountPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ValidationError("count polynomial needs a positive length");
}

CountPoly CountPoly::one(std::size_t len) {
  CountPoly out(len);
  out.coeffs_[0] = 1;
  return out;
}

CountPoly CountPoly::monomial(std::size_t len, std::int64_t j, const BigInt& c) {
  CountPoly out(len);
  const auto n = static_cast<std::int64_t>(len);
  out.coeffs_[static_cast<std::size_t>(((j % n) + n) % n)] = c;
  return out;
}

const BigInt& CountPoly::at(std::int64_t j) const {
  const auto n = static_cast<std::int64_t>(coeffs_.size());
  return coeffs_[static_cast<std::size_t>(((j % n) + n) % n)];
}

BigInt CountPoly::at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

std::string CountPoly::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_decimal(coeffs_[j]);
    if (j >= 1) out += "x";
    if (j >= 2) out += "^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

CountPoly cyclic_mul(const CountPoly& a, const CountPoly& b) {
  if (a.size() != b.size()) throw ValidationError("count polynomials of different lengths");
  const std::size_t n = a.size();
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < n; ++j) {
    if (b[j] != 0) nz_b.push_back(j);
  }
  CountPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (auto j : nz_b) {
      std::size_t k = i + j;
      if (k >= n) k -= n;
      mpz_addmul(out[k].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

CountPoly cyclic_pow(const CountPoly& a, std::uint64_t e) {
  CountPoly result = CountPoly::one(a.size());
  CountPoly base = a;
  while (e) {
    if (e & 1) result = cyclic_mul(result, base);
    e >>= 1;
    if (e) base = cyclic_mul(base, base);
  }
  return result;
}

std::uint64_t DigitCounts::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

DigitCounts digit_counts(const BigInt& n, std::uint64_t radix) {
  DigitCounts out{std::vector<std::uint64_t>(radix, 0)};
  for (auto d : to_digits(n, radix)) ++out.counts[d];
  return out;
}

CountPoly base_poly(std::uint64_t d, const DigitBinomCache& cache) {
  const auto& ctx = cache.ctx();
  if (d >= ctx.size()) throw ValidationError("base polynomial digit must be below q^h");
  CountPoly out(ctx.group_order());
  for (std::uint64_t m = 0; m <= d; ++m) {
    auto j = cache.digit_binom_exponent(d, m);
    // Digit binomials with m <= d are units.
    if (!j) throw IntegrityError("digit binomial vanished");
    out[*j] += 1;
  }
  return out;
}

BaseTable base_table(const DigitBinomCache& cache) {
  if (cache.radix() > kMaxTableRadix) {
    throw GuardrailError("full base table needs q^h <= " + std::to_string(kMaxTableRadix) + ", got " +
                         std::to_string(cache.radix()));
  }
  BaseTable table;
  table.reserve(cache.radix());
  for (std::uint64_t d = 0; d < cache.radix(); ++d) table.push_back(base_poly(d, cache));
  return table;
}

namespace {

CountPoly product_of_powers(const DigitCounts& counts, std::size_t len,
                            const std::function<const CountPoly&(std::uint64_t)>& base) {
  CountPoly result = CountPoly::one(len);
  for (std::uint64_t d = 0; d < counts.counts.size(); ++d) {
    if (counts.counts[d] == 0) continue;
    result = cyclic_mul(result, cyclic_pow(base(d), counts.counts[d]));
  }
  return result;
}

}  // namespace

CountPoly gn_fast(const BigInt& n, const DigitBinomCache& cache) {
  const auto counts = digit_counts(n, cache.radix());
  CountPoly scratch(1);
  return product_of_powers(counts, cache.ctx().group_order(), [&](std::uint64_t d) -> const CountPoly& {
    scratch = base_poly(d, cache);
    return scratch;
  });
}

CountPoly gn_fast(const BigInt& n, const BaseTable& table) {
  if (table.empty()) throw ValidationError("empty base table");
  const auto counts = digit_counts(n, table.size());
  return product_of_powers(counts, table.front().size(),
                           [&](std::uint64_t d) -> const CountPoly& { return table[d]; });
}

BigInt units_by_evaluation(const DigitCounts& counts, const BaseTable& table) {
  if (counts.counts.size() != table.size()) throw ValidationError("digit counts do not match the base table");
  BigInt out = 1;
  for (std::size_t d = 0; d < table.size(); ++d) {
    if (counts.counts[d] != 0) out *= pow(table[d].at_one(), counts.counts[d]);
  }
  return out;
}

std::vector<BigInt> expanded_product(const BigInt& n, const BaseTable& table) {
  const auto counts = digit_counts(n, table.size());
  std::vector<BigInt> result{1};
  for (std::size_t d = 0; d < table.size(); ++d) {
    for (std::uint64_t k = 0; k < counts.counts[d]; ++k) {
      const auto& g = table[d].coeffs();
      std::vector<BigInt> next(result.size() + g.size() - 1);
      for (std::size_t i = 0; i < result.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
          mpz_addmul(next[i + j].get_mpz_t(), result[i].get_mpz_t(), g[j].get_mpz_t());
        }
      }
      while (next.size() > 1 && next.back() == 0) next.pop_back();
      result = std::move(next);
    }
  }
  return result;
}

PlainDivMod divide_by_x_pow_minus_one(const std::vector<BigInt>& p, std::size_t len) {
  if (len == 0) throw ValidationError("division by x^0 - 1");
  std::vector<BigInt> r = p;
  if (r.size() < len) r.resize(len);
  std::vector<BigInt> quotient(r.size() > len ? r.size() - len : 1);
  // Long division by the monic x^len - 1: each leading term c x^k moves to
  // c x^{k - len} in the remainder.
  for (std::size_t k = r.size(); k-- > len;) {
    if (r[k] == 0) continue;
    quotient[k - len] += r[k];
    r[k - len] += r[k];
    r[k] = 0;
  }
  while (quotient.size() > 1 && quotient.back() == 0) quotient.pop_back();
  r.resize(len);
  return {std::move(quotient), std::move(r)};
}

std::string_view method_name(Method m) { return m == Method::fast ? "fast" : "brute"; }

Method parse_method(std::string_view text) {
  if (text == "fast") return Method::fast;
  if (text == "brute") return Method::brute;
  throw ValidationError("unknown method '" + std::string(text) + "' (expected fast or brute)");
}

std::vector<std::string> residue_labels(const ResidueCtx& ctx) {
  std::vector<std::string> labels;
  labels.reserve(ctx.group_order());
  for (std::uint64_t j = 0; j < ctx.group_order(); ++j) {
    labels.push_back(ctx.generator_power(static_cast<std::int64_t>(j)).to_string());
  }
  return labels;
}

Distribution distribution_brute(const BigInt& n, const DigitBinomCache& cache, std::uint64_t max_n) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  if (n > from_u64(max_n)) {
    throw GuardrailError("brute-force distribution limited to n <= " + std::to_string(max_n) + ", got " +
                         to_decimal(n));
  }
  const auto& ctx = cache.ctx();
  const std::uint64_t radix = cache.radix();
  const std::uint64_t top = to_u64(n);
  const auto n_digits = to_digits(n, radix);

  CountPoly counts(ctx.group_order());
  std::vector<std::uint64_t> tally(ctx.group_order(), 0);
  std::uint64_t zeros = 0;
  std::vector<std::uint64_t> m_digits(n_digits.size(), 0);
  for (std::uint64_t m = 0;; ++m) {
    Residue value = binom_mod_digits(n_digits, m_digits, cache);
    if (value.is_zero()) {
      ++zeros;
    } else {
      ++tally[ctx.dlog(value)];
    }
    if (m == top) break;
    for (auto& d : m_digits) {
      if (++d < radix) break;
      d = 0;
    }
  }
  for (std::size_t j = 0; j < tally.size(); ++j) counts[j] = from_u64(tally[j]);
  return Distribution{n, Method::brute, std::move(counts), from_u64(zeros), residue_labels(ctx)};
}

Distribution distribution(const BigInt& n, const DigitBinomCache& cache, Method method, const BaseTable* table,
                          const Guardrails& limits) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  if (method == Method::brute) return distribution_brute(n, cache, limits.max_brute_n);
  if (table && (table->size() != cache.radix() || table->front().size() != cache.ctx().group_order())) {
    throw ValidationError("base table does not match the residue context");
  }
  CountPoly counts = table ? gn_fast(n, *table) : gn_fast(n, cache);
  BigInt zeros = n + 1 - counts.at_one();
  return Distribution{n, Method::fast, std::move(counts), std::move(zeros), residue_labels(cache.ctx())};
}

}  // namespace carlitz
