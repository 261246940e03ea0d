#include <doctest.h>

#include "carlitz/error.hpp"
#include "carlitz/poly.hpp"
#include "oracles.hpp"

using namespace carlitz;

namespace {

Poly P(const FieldPtr& f, const char* text) { return parse_poly(text, f); }

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("parse and format") {
  auto f3 = Field::create(3, 1);
  CHECK(P(f3, "T^2+1").coeffs() == std::vector<Field::Code>{1, 0, 1});
  CHECK(P(f3, "2*T+2").coeffs() == std::vector<Field::Code>{2, 2});
  CHECK(P(f3, "T^3 + 5*T + 3").to_string() == "T^3+2*T");
  CHECK(P(f3, "T + T").to_string() == "2*T");
  CHECK(P(f3, "T^2*2").to_string() == "2*T^2");
  CHECK(P(f3, "0").is_zero());
  CHECK(P(f3, "0").to_string() == "0");
  CHECK(P(f3, "T").to_string() == "T");

  auto f4 = Field::create(2, 2);
  auto p = P(f4, "(u+1)*T+u");
  CHECK(p.degree() == 1u);
  CHECK(p.coeff(1) == f4->parse("u+1"));
  CHECK(p.coeff(0) == f4->parse("u"));
  CHECK(p.to_string() == "(u+1)*T+u");
  CHECK(P(f4, "T+u").to_string() == "T+u");
  CHECK(P(f4, "u*T^2+1").to_string() == "u*T^2+1");
  auto f9 = Field::create(3, 2);
  CHECK(P(f9, "2*u*T^3+(u+2)*T").to_string() == "2*u*T^3+(u+2)*T");

  for (int i = 0; i < 200; ++i) {
    auto r = oracle::random_poly(i % 2 ? f4 : f3, 6);
    CHECK(parse_poly(r.to_string(), r.field()) == r);
  }
}

TEST_CASE("parse errors") {
  auto f3 = Field::create(3, 1);
  for (const char* bad : {"", "T^", "3x", "T+", "(T+1)", "T*T^2", "u", "T^-1", "1++T"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(f3, bad), ValidationError);
  }
  CHECK_THROWS_AS(P(Field::create(2, 2), "u^2*T"), ValidationError);
}

TEST_CASE("ring operations") {
  auto f3 = Field::create(3, 1);
  CHECK(P(f3, "T+1") * P(f3, "T+1") == P(f3, "T^2+2*T+1"));
  CHECK((P(f3, "T+1") + P(f3, "2*T+2")).is_zero());
  CHECK((P(f3, "T^3") - P(f3, "T")).to_string() == "T^3+2*T");
  CHECK(-P(f3, "T+1") == P(f3, "2*T+2"));
  CHECK(P(f3, "2*T^2+T").monic() == P(f3, "T^2+2*T"));
  CHECK_FALSE(Poly::zero(f3).degree().has_value());
  CHECK(Poly::zero(f3).leading() == 0);
  CHECK_THROWS_AS(P(f3, "T") + P(Field::create(5, 1), "T"), ValidationError);

  for (auto f : {f3, Field::create(2, 2), Field::create(7, 1)}) {
    for (int i = 0; i < 100; ++i) {
      auto a = oracle::random_poly(f, 8);
      auto b = oracle::random_poly(f, 8);
      auto c = oracle::random_poly(f, 8);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero() && !b.is_zero()) CHECK(*(a * b).degree() == *a.degree() + *b.degree());
    }
  }
}

TEST_CASE("division with remainder") {
  auto f3 = Field::create(3, 1);
  auto [q, r] = divmod(P(f3, "T^2+2*T+1"), P(f3, "T^2+1"));
  CHECK(q == P(f3, "1"));
  CHECK(r == P(f3, "2*T"));

  auto small = divmod(P(f3, "T+2"), P(f3, "T^3"));
  CHECK(small.quotient.is_zero());
  CHECK(small.remainder == P(f3, "T+2"));

  CHECK_THROWS_AS(divmod(P(f3, "T"), Poly::zero(f3)), DomainError);

  for (auto f : {f3, Field::create(2, 3), Field::create(5, 1)}) {
    for (int i = 0; i < 200; ++i) {
      auto a = oracle::random_poly(f, 12);
      auto b = oracle::random_poly(f, 6);
      if (b.is_zero()) continue;
      auto dm = divmod(a, b);
      CHECK(dm.quotient * b + dm.remainder == a);
      if (!dm.remainder.is_zero()) CHECK(*dm.remainder.degree() < *b.degree());
    }
  }
}

TEST_CASE("gcd") {
  auto f3 = Field::create(3, 1);
  CHECK(gcd(P(f3, "T^2+1"), P(f3, "T")).is_one());
  CHECK(gcd(P(f3, "T^2+2"), P(f3, "T+1")) == P(f3, "T+1"));
  CHECK(gcd(Poly::zero(f3), P(f3, "2*T+1")) == P(f3, "T+2"));
  CHECK_THROWS_AS(gcd(Poly::zero(f3), Poly::zero(f3)), DomainError);

  for (auto f : {f3, Field::create(2, 2)}) {
    for (int i = 0; i < 200; ++i) {
      auto common = oracle::random_poly(f, 3);
      auto a = oracle::random_poly(f, 6) * common;
      auto b = oracle::random_poly(f, 6) * common;
      if (a.is_zero() && b.is_zero()) continue;
      auto e = xgcd(a, b);
      CHECK(e.gcd.is_monic());
      CHECK(e.gcd == gcd(a, b));
      CHECK(e.s * a + e.t * b == e.gcd);
      CHECK(rem(a, e.gcd).is_zero());
      CHECK(rem(b, e.gcd).is_zero());
      if (!common.is_zero()) CHECK(rem(e.gcd, common.monic()).is_zero());
    }
  }
}

TEST_CASE("modular powers") {
  auto f3 = Field::create(3, 1);
  auto m = P(f3, "T^2+1");
  CHECK(powmod(P(f3, "T"), 9, m) == P(f3, "T"));
  CHECK(powmod(P(f3, "T"), 0, m).is_one());
  CHECK(powmod(P(f3, "T"), 1, m) == P(f3, "T"));
  CHECK(powmod(P(f3, "T"), BigInt("1000000000000000000000"), m) == P(f3, "1"));
  CHECK_THROWS_AS(powmod(P(f3, "T"), 2, Poly::zero(f3)), DomainError);

  auto f4 = Field::create(2, 2);
  for (auto [f, modulus] : {std::pair{f3, P(f3, "T^3+2*T+1")}, std::pair{f4, P(f4, "T^2+u*T+1")}}) {
    for (int i = 0; i < 20; ++i) {
      auto base = oracle::random_poly(f, 4);
      Poly acc = rem(Poly::one(f), modulus);
      for (unsigned e = 0; e <= 64; ++e) {
        CHECK(powmod(base, e, modulus) == acc);
        acc = rem(acc * base, modulus);
      }
    }
  }
}

TEST_CASE("irreducibility") {
  auto f3 = Field::create(3, 1);
  CHECK(is_irreducible(P(f3, "T^2+1")));
  CHECK_FALSE(is_irreducible(P(f3, "T^2+2")));
  CHECK(is_irreducible(P(f3, "T")));
  CHECK(is_irreducible(P(Field::create(2, 2), "T+u")));
  CHECK(is_irreducible(P(f3, "2*T+1")));
  CHECK_THROWS_AS(is_irreducible(P(f3, "2")), ValidationError);
  CHECK_THROWS_AS(is_irreducible(Poly::zero(f3)), ValidationError);
}

TEST_CASE("irreducibility agrees with trial division") {
  for (auto f : {Field::create(2, 1), Field::create(3, 1), Field::create(2, 2)}) {
    const unsigned max_degree = f->order() <= 3 ? 4 : 3;
    for (unsigned d = 1; d <= max_degree; ++d) {
      std::uint64_t count = 0;
      for (std::uint64_t k = 0; k < oracle::ipow(f->order(), d); ++k) {
        auto g = oracle::monic_of_index(f, d, k);
        const bool expected = oracle::irreducible_by_trial_division(g);
        CAPTURE(g.to_string());
        CHECK(is_irreducible(g) == expected);
        count += expected;
      }
      // Monic irreducible counts: one quadratic over F_2, three over F_3, 18 quartics over F_3.
      if (d == 2 && f->order() == 2) CHECK(count == 1);
      if (d == 2 && f->order() == 3) CHECK(count == 3);
      if (d == 4 && f->order() == 3) CHECK(count == 18);
    }
  }
}

TEST_CASE("first irreducible of a given degree") {
  auto f3 = Field::create(3, 1);
  CHECK(find_irreducible(1, f3) == P(f3, "T"));
  CHECK(find_irreducible(2, f3) == P(f3, "T^2+1"));
  CHECK(find_irreducible(2, Field::create(2, 1)).to_string() == "T^2+T+1");
  CHECK(find_irreducible(3, Field::create(2, 1)).to_string() == "T^3+T+1");
  auto g = find_irreducible(6, Field::create(5, 1));
  CHECK(g.degree() == 6u);
  CHECK(g.is_monic());
  CHECK(is_irreducible(g));
  CHECK_THROWS_AS(find_irreducible(0, f3), ValidationError);
}

}
