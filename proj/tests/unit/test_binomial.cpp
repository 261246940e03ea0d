#include <doctest.h>

#include "carlitz/binomial.hpp"
#include "carlitz/error.hpp"
#include "oracles.hpp"

using namespace carlitz;

namespace {

struct Setup {
  std::uint32_t p;
  unsigned s;
  const char* prime;
};

// Contexts small enough for exhaustive exact comparison (q^h <= 81).
const std::vector<Setup> kSmall{{2, 1, "T"},   {2, 1, "T^2+T+1"}, {2, 1, "T^3+T+1"}, {3, 1, "T+1"},
                                {3, 1, "T"},   {3, 1, "T^2+1"},   {2, 2, "T+u"},     {2, 2, "T^2+T+u"},
                                {5, 1, "T+2"}, {3, 1, "T^2+T+2"}};

}  // namespace

TEST_SUITE("binomial") {

TEST_CASE("D_i") {
  auto f3 = Field::create(3, 1);
  CHECK(d_poly(0, f3).is_one());
  CHECK(d_poly(1, f3).to_string() == "T^3+2*T");
  CHECK(d_poly(2, f3).degree() == 18u);
  CHECK(d_poly(2, f3) == (parse_poly("T^9", f3) - parse_poly("T", f3)) * (parse_poly("T^9", f3) - parse_poly("T^3", f3)));
  CHECK(d_poly(3, Field::create(2, 1)).degree() == 24u);
  CHECK_THROWS_AS(d_poly(2, f3, 17), GuardrailError);
  CHECK_THROWS_AS(d_poly(40, f3), GuardrailError);
}

TEST_CASE("factorials") {
  auto f3 = Field::create(3, 1);
  CHECK(factorial_exact(0, f3).is_one());
  CHECK(factorial_exact(1, f3).is_one());
  CHECK(factorial_exact(2, f3).is_one());
  CHECK(factorial_exact(3, f3).to_string() == "T^3+2*T");
  CHECK(factorial_exact(4, f3).to_string() == "T^3+2*T");
  CHECK(factorial_exact(6, f3) == d_poly(1, f3) * d_poly(1, f3));
  CHECK_THROWS_AS(factorial_exact(1000000, f3), GuardrailError);

  for (auto f : {f3, Field::create(2, 1), Field::create(2, 2)}) {
    ExactCarlitz exact(f);
    for (std::uint64_t n = 0; n <= 100; ++n) {
      CHECK(exact.factorial(n).degree() == factorial_degree(n, f->order()));
      CHECK(exact.factorial(n).is_monic());
    }
  }
  // 1811 = (2,0,0,1,1,1,2) in base 3.
  CHECK(factorial_degree(1811, 3) == 1 * 3 * 27 + 1 * 4 * 81 + 1 * 5 * 243 + 2 * 6 * 729);
  CHECK(factorial_degree(~std::uint64_t{0}, 3) == ~std::uint64_t{0});
}

TEST_CASE("exact binomials") {
  auto f3 = Field::create(3, 1);
  CHECK(binom_exact(3, 1, f3).to_string() == "T^3+2*T");
  CHECK(binom_exact(4, 2, f3).to_string() == "T^3+2*T");
  CHECK(binom_exact(7, 7, f3).is_one());
  CHECK(binom_exact(7, 0, f3).is_one());
  CHECK(binom_exact(2, 3, f3).is_zero());

  ExactCarlitz exact(Field::create(2, 1));
  for (std::uint64_t n = 0; n <= 40; ++n) {
    for (std::uint64_t m = 0; m <= n; ++m) {
      CHECK(exact.binom(n, m) == exact.binom(n, n - m));
      CHECK(exact.binom(n, m).is_monic());
    }
  }
}

TEST_CASE("digit binomials") {
  auto f3 = Field::create(3, 1);
  DigitBinomCache cache(oracle::context(f3, "T^2+1", "T+1"));
  CHECK(cache.has_memo());
  CHECK(cache.radix() == 9);
  CHECK(cache.digit_binom_mod(3, 1).to_string() == "T");
  CHECK(cache.digit_binom_exponent(3, 1) == 6u);
  CHECK(cache.digit_binom_mod(8, 4).is_one());
  CHECK(cache.digit_binom_mod(1, 2).is_zero());
  CHECK_FALSE(cache.digit_binom_exponent(1, 2).has_value());
  CHECK_THROWS_AS(cache.digit_binom_mod(9, 1), ValidationError);

  for (const auto& d : cache.d_mod()) CHECK_FALSE(d.is_zero());
  for (std::size_t i = 0; i < cache.d_mod().size(); ++i) CHECK((cache.d_mod()[i] * cache.d_inv()[i]).is_one());
}

TEST_CASE("memo, direct product and exact values agree on every digit pair") {
  for (const auto& s : kSmall) {
    auto f = Field::create(s.p, s.s);
    auto ctx = oracle::context(f, s.prime);
    CAPTURE(s.prime);
    DigitBinomCache memo(ctx);
    DigitBinomCache plain(ctx, false);
    CHECK(memo.has_memo());
    CHECK_FALSE(plain.has_memo());
    ExactCarlitz exact(f);
    for (std::uint64_t a = 0; a < memo.radix(); ++a) {
      for (std::uint64_t b = 0; b < memo.radix(); ++b) {
        const Residue expected = ctx->reduce(exact.binom(a, b));
        CHECK(memo.digit_binom_mod(a, b) == expected);
        CHECK(plain.digit_binom_mod(a, b) == expected);
        CHECK(memo.digit_binom_direct(a, b) == expected);
        CHECK(memo.digit_binom_exponent(a, b) == plain.digit_binom_exponent(a, b));
      }
    }
  }
}

TEST_CASE("binomials of multi-digit arguments") {
  auto f3 = Field::create(3, 1);
  DigitBinomCache cache(oracle::context(f3, "T^2+1", "T+1"));
  CHECK(binom_mod(1811, 0, cache).is_one());
  CHECK(binom_mod(12, 3, cache).is_one());
  CHECK(binom_mod(4, 2, cache).to_string() == "T");
  CHECK(binom_mod(3, 4, cache).is_zero());
  CHECK(binom_mod(BigInt("100000000000000000000"), BigInt("100000000000000000000"), cache).is_one());
  CHECK_THROWS_AS(binom_mod(-1, 0, cache), ValidationError);
}

TEST_CASE("Lucas-type congruence against exact values for n < q^{3h}") {
  for (const auto& s : kSmall) {
    auto f = Field::create(s.p, s.s);
    auto ctx = oracle::context(f, s.prime);
    if (ctx->size() > 4) continue;
    CAPTURE(s.prime);
    DigitBinomCache cache(ctx);
    ExactCarlitz exact(f);
    const std::uint64_t limit = ctx->size() * ctx->size() * ctx->size();
    for (std::uint64_t n = 0; n < limit; ++n) {
      for (std::uint64_t m = 0; m <= n; ++m) {
        CHECK(binom_mod(n, m, cache) == ctx->reduce(exact.binom(n, m)));
      }
    }
  }
}

TEST_CASE("unit-or-zero law") {
  auto f3 = Field::create(3, 1);
  DigitBinomCache cache(oracle::context(f3, "T^2+1", "T+1"));
  for (std::uint64_t n = 0; n <= 250; ++n) {
    const auto nd = to_digits(n, 9);
    for (std::uint64_t m = 0; m <= n; ++m) {
      const auto md = to_digits(m, 9);
      bool exceeds = false;
      for (std::size_t i = 0; i < md.size(); ++i) exceeds = exceeds || md[i] > (i < nd.size() ? nd[i] : 0);
      const Residue r = binom_mod(n, m, cache);
      CHECK(r.is_zero() == exceeds);
      CHECK(binom_exponent_digits(nd, md, cache).has_value() == !exceeds);
      if (!exceeds) CHECK(cache.ctx().generator_power(static_cast<std::int64_t>(*binom_exponent_digits(nd, md, cache))) == r);
    }
  }
}

TEST_CASE("factorials modulo the prime") {
  for (const auto& s : kSmall) {
    auto f = Field::create(s.p, s.s);
    auto ctx = oracle::context(f, s.prime);
    ExactCarlitz exact(f);
    for (std::uint64_t n = 0; n <= 60; ++n) CHECK(factorial_mod(n, *ctx) == ctx->reduce(exact.factorial(n)));
  }
}

}
