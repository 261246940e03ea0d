#include <doctest.h>

#include <set>

#include "carlitz/error.hpp"
#include "carlitz/residue.hpp"
#include "oracles.hpp"

using namespace carlitz;

TEST_SUITE("residue") {

TEST_CASE("construction") {
  auto f3 = Field::create(3, 1);
  auto ctx = oracle::context(f3, "T^2+1", "T+1");
  CHECK(ctx->degree() == 2);
  CHECK(ctx->size() == 9);
  CHECK(ctx->group_order() == 8);
  CHECK(ctx->has_dlog_table());

  auto linear = oracle::context(f3, "T+1");
  CHECK(linear->group_order() == 2);
  CHECK(linear->primitive_root().to_string() == "2");

  try {
    oracle::context(f3, "T^2+1", "2");
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("order 2") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(oracle::context(f3, "T^2+2"), doctest::Contains("prime is reducible"), ValidationError);
  CHECK_THROWS_WITH_AS(oracle::context(f3, "2*T^2+2"), doctest::Contains("monic"), ValidationError);
  CHECK_THROWS_AS(oracle::context(f3, "1"), ValidationError);
  CHECK_THROWS_AS(oracle::context(f3, "T^2+1", "0"), ValidationError);
}

TEST_CASE("the power table of T+1 modulo T^2+1") {
  auto ctx = oracle::context(Field::create(3, 1), "T^2+1", "T+1");
  const std::vector<std::string> expected{"1", "T+1", "2*T", "2*T+1", "2", "2*T+2", "T", "T+2"};
  for (std::int64_t j = 0; j < 8; ++j) {
    CHECK(ctx->generator_power(j).to_string() == expected[j]);
    CHECK(ctx->generator_power(j + 8) == ctx->generator_power(j));
    CHECK(ctx->generator_power(j - 16) == ctx->generator_power(j));
  }
}

TEST_CASE("arithmetic") {
  auto f3 = Field::create(3, 1);
  auto ctx = oracle::context(f3, "T^2+1", "T+1");
  auto r = [&](const char* t) { return ctx->reduce(parse_poly(t, f3)); };
  CHECK(r("T+1") * r("T+1") == r("2*T"));
  CHECK(r("T^3") == r("2*T"));
  CHECK(r("T+1") + r("2*T+2") == ctx->zero());
  CHECK(r("T") - r("T+1") == r("2"));
  CHECK(ctx->inverse(ctx->one()) == ctx->one());
  CHECK(ctx->inverse(r("T")) == r("2*T"));
  CHECK_THROWS_AS(ctx->inverse(ctx->zero()), DomainError);

  auto other = oracle::context(f3, "T^2+1", "T+2");
  CHECK_THROWS_AS(r("T") * other->one(), ValidationError);
}

TEST_CASE("powers and orders") {
  auto f3 = Field::create(3, 1);
  auto ctx = oracle::context(f3, "T^2+1", "T+1");
  auto r = [&](const char* t) { return ctx->reduce(parse_poly(t, f3)); };
  const auto& g = ctx->primitive_root();
  CHECK(ctx->pow(g, BigInt(6)) == r("T"));
  CHECK(ctx->pow(g, BigInt(8)).is_one());
  CHECK(ctx->pow(g, BigInt(7)) == r("T+2"));
  CHECK(ctx->pow(g, std::int64_t{-1}) * g == ctx->one());
  CHECK(ctx->pow(g, BigInt("100000000000000000000000000000000000007")) == r("T+2"));
  CHECK(ctx->pow(ctx->zero(), BigInt(0)).is_one());
  CHECK(ctx->pow(ctx->zero(), BigInt(5)).is_zero());
  CHECK_THROWS_AS(ctx->pow(ctx->zero(), std::int64_t{-1}), DomainError);

  CHECK(ctx->order(g) == 8);
  CHECK(ctx->order(ctx->one()) == 1);
  CHECK(ctx->order(r("2")) == 2);
  CHECK(ctx->order(r("T")) == 4);
  CHECK_THROWS_AS(ctx->order(ctx->zero()), DomainError);
}

TEST_CASE("primitive root search") {
  auto f3 = Field::create(3, 1);
  CHECK(oracle::context(f3, "T^2+1")->primitive_root().to_string() == "T+1");
  CHECK(oracle::context(f3, "T")->primitive_root().to_string() == "2");
  CHECK(oracle::context(Field::create(2, 1), "T^2+T+1")->primitive_root().to_string() == "T");
  auto a = oracle::context(Field::create(5, 1), "T^3+T+1");
  auto b = oracle::context(Field::create(5, 1), "T^3+T+1");
  CHECK(a->primitive_root().to_string() == b->primitive_root().to_string());
  CHECK(a->search_primitive_root() == a->primitive_root());
}

TEST_CASE("discrete logarithms") {
  auto f3 = Field::create(3, 1);
  auto ctx = oracle::context(f3, "T^2+1", "T+1");
  CHECK(ctx->dlog(ctx->reduce(parse_poly("T", f3))) == 6);
  CHECK(ctx->dlog(ctx->one()) == 0);
  CHECK(ctx->dlog(ctx->reduce(parse_poly("T+2", f3))) == 7);
  CHECK_THROWS_AS(ctx->dlog(ctx->zero()), DomainError);
}

TEST_CASE("powers enumerate the unit group, exhaustive for q^h <= 81") {
  const std::vector<std::tuple<std::uint32_t, unsigned, const char*>> cases{
      {2, 1, "T"},          {2, 1, "T^2+T+1"}, {2, 1, "T^3+T+1"}, {2, 1, "T^4+T+1"}, {2, 1, "T^6+T+1"},
      {3, 1, "T+1"},        {3, 1, "T^2+1"},   {3, 1, "T^3+2*T+1"}, {3, 1, "T^4+2*T^3+2"},
      {2, 2, "T+u"},        {2, 2, "T^2+T+u"}, {2, 3, "T+u^2"},   {5, 1, "T^2+2"},   {7, 1, "T^2+1"}};
  for (auto [p, s, prime] : cases) {
    auto ctx = oracle::context(Field::create(p, s), prime);
    CAPTURE(prime);
    const auto powers = oracle::power_scan(*ctx);
    std::set<std::uint64_t> seen;
    for (std::uint64_t j = 0; j < powers.size(); ++j) {
      CHECK_FALSE(powers[j].is_zero());
      seen.insert(ctx->code(powers[j]));
      CHECK(ctx->dlog(powers[j]) == j);
      CHECK(ctx->generator_power(static_cast<std::int64_t>(j)) == powers[j]);
      CHECK(ctx->from_code(ctx->code(powers[j])) == powers[j]);
    }
    CHECK(seen.size() == ctx->group_order());
  }
}

TEST_CASE("dlog is a homomorphism") {
  auto ctx = oracle::context(Field::create(3, 1), "T^4+2*T^3+2");
  const auto n = ctx->group_order();
  for (int i = 0; i < 500; ++i) {
    auto a = ctx->from_code(oracle::uniform(1, ctx->size() - 1));
    auto b = ctx->from_code(oracle::uniform(1, ctx->size() - 1));
    CHECK(ctx->dlog(a * b) == (ctx->dlog(a) + ctx->dlog(b)) % n);
  }
}

TEST_CASE("baby-step giant-step agrees with the tables") {
  auto f3 = Field::create(3, 1);
  auto prime = parse_poly("T^4+2*T^3+2", f3);
  auto table = ResidueCtx::create(prime);
  auto bsgs = ResidueCtx::create(prime, std::nullopt, ResidueOptions{0});
  CHECK(table->has_dlog_table());
  CHECK_FALSE(bsgs->has_dlog_table());
  CHECK(bsgs->primitive_root() == bsgs->reduce(table->primitive_root().rep()));
  for (std::uint64_t c = 1; c < table->size(); ++c) {
    CHECK(bsgs->dlog(bsgs->from_code(c)) == table->dlog(table->from_code(c)));
    CHECK(bsgs->generator_power(static_cast<std::int64_t>(c)) == bsgs->reduce(table->generator_power(static_cast<std::int64_t>(c)).rep()));
  }

  // 2^25 - 1 = 31 * 601 * 1801 is past the table threshold.
  auto big = ResidueCtx::create(find_irreducible(25, Field::create(2, 1)));
  CHECK_FALSE(big->has_dlog_table());
  CHECK(big->group_order_factors().size() == 3);
  for (int i = 0; i < 20; ++i) {
    const auto j = oracle::uniform(0, big->group_order() - 1);
    CHECK(big->dlog(big->generator_power(static_cast<std::int64_t>(j))) == j);
  }
}

TEST_CASE("codes") {
  auto f4 = Field::create(2, 2);
  auto ctx = oracle::context(f4, "T^2+T+u");
  CHECK(ctx->size() == 16);
  for (std::uint64_t c = 0; c < 16; ++c) CHECK(ctx->code(ctx->from_code(c)) == c);
  CHECK(ctx->code(ctx->reduce(parse_poly("T", f4))) == 4);
  CHECK_THROWS_AS(ctx->from_code(16), ValidationError);
}

}
