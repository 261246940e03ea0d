#include "carlitz/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "carlitz/binomial.hpp"
#include "carlitz/dist.hpp"
#include "carlitz/error.hpp"
#include "carlitz/report.hpp"

namespace carlitz::cli {

namespace {

struct Config {
  std::uint32_t p = 0;
  unsigned s = 1;
  std::string field_modulus;
  std::string prime;
  unsigned prime_degree = 0;
  std::string primitive_root;
  std::string n = "0";
  std::string m = "0";
  std::string method = "fast";
  std::string output = "json";
  std::string cache_path;
  std::uint64_t max_n = 0;
  bool exact = false;
  std::string candidate;
  std::string poly;
  unsigned degree = 0;
  Guardrails limits;
};

FieldPtr make_field(const Config& cfg) {
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!cfg.field_modulus.empty()) modulus = parse_field_modulus(cfg.field_modulus, cfg.p);
  return Field::create(cfg.p, cfg.s, modulus);
}

ResidueCtxPtr make_context(const Config& cfg) {
  auto field = make_field(cfg);
  if (cfg.prime.empty() && cfg.prime_degree == 0) throw ValidationError("one of --prime or --prime-degree is required");
  if (!cfg.prime.empty() && cfg.prime_degree != 0) throw ValidationError("--prime and --prime-degree are exclusive");
  const Poly prime = cfg.prime.empty() ? find_irreducible(cfg.prime_degree, field) : parse_poly(cfg.prime, field);
  std::optional<Poly> root;
  if (!cfg.primitive_root.empty()) root = parse_poly(cfg.primitive_root, field);
  return ResidueCtx::create(prime, root);
}

std::optional<std::filesystem::path> cache_file(const Config& cfg, const ResidueCtx& ctx) {
  if (!cfg.cache_path.empty()) return std::filesystem::path(cfg.cache_path);
  if (const char* dir = std::getenv("CARLITZ_CACHE_DIR"); dir && *dir) return default_cache_file(dir, ctx);
  return std::nullopt;
}

BaseTable table_for(const Config& cfg, const DigitBinomCache& cache) {
  const auto file = cache_file(cfg, cache.ctx());
  if (file) {
    if (auto table = load_base_table(*file, cache.ctx())) return std::move(*table);
  }
  BaseTable table = base_table(cache);
  if (file) save_base_table(*file, cache.ctx(), table);
  return table;
}

int cmd_dist(const Config& cfg, std::ostream& out) {
  const auto method = parse_method(cfg.method);
  if (cfg.output != "json" && cfg.output != "table" && cfg.output != "csv") {
    throw ValidationError("unknown output format '" + cfg.output + "'");
  }
  const BigInt n = parse_natural(cfg.n);
  auto ctx = make_context(cfg);
  DigitBinomCache cache(ctx);

  std::optional<BaseTable> table;
  if (method == Method::fast && cache_file(cfg, *ctx)) table = table_for(cfg, cache);
  const Distribution dist = distribution(n, cache, method, table ? &*table : nullptr, cfg.limits);

  if (cfg.output == "json") {
    out << distribution_to_json(*ctx, dist).dump(2) << '\n';
  } else if (cfg.output == "csv") {
    out << distribution_csv(dist);
  } else {
    out << distribution_table(*ctx, dist);
  }
  return kOk;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  if (cfg.max_n > cfg.limits.max_brute_n) {
    throw GuardrailError("--max-n " + std::to_string(cfg.max_n) + " exceeds the brute-force limit " +
                         std::to_string(cfg.limits.max_brute_n));
  }
  auto ctx = make_context(cfg);
  DigitBinomCache cache(ctx);
  const BaseTable table = table_for(cfg, cache);
  for (std::uint64_t n = 0; n <= cfg.max_n; ++n) {
    const BigInt big = from_u64(n);
    const CountPoly fast = gn_fast(big, table);
    const Distribution brute = distribution_brute(big, cache, cfg.limits.max_brute_n);
    if (!(fast == brute.counts)) {
      out << "MISMATCH n=" << n << "\n  fast:  " << fast.to_string() << "\n  brute: " << brute.counts.to_string()
          << '\n';
      return kMismatch;
    }
  }
  out << "OK " << cfg.max_n + 1 << " cases\n";
  return kOk;
}

int cmd_binom(const Config& cfg, std::ostream& out) {
  const BigInt n = parse_natural(cfg.n);
  const BigInt m = parse_natural(cfg.m);
  if (cfg.exact) {
    auto field = make_field(cfg);
    out << binom_exact(to_u64(n), to_u64(m), field, cfg.limits.max_exact_degree).to_string() << '\n';
    return kOk;
  }
  DigitBinomCache cache(make_context(cfg));
  out << binom_mod(n, m, cache).to_string() << '\n';
  return kOk;
}

int cmd_factorial(const Config& cfg, std::ostream& out) {
  const BigInt n = parse_natural(cfg.n);
  if (cfg.exact) {
    auto field = make_field(cfg);
    out << factorial_exact(to_u64(n), field, cfg.limits.max_exact_degree).to_string() << '\n';
    return kOk;
  }
  auto ctx = make_context(cfg);
  out << factorial_mod(n, *ctx).to_string() << '\n';
  return kOk;
}

int cmd_primroot(const Config& cfg, std::ostream& out) {
  Config plain = cfg;
  plain.primitive_root.clear();
  auto ctx = make_context(plain);
  if (cfg.candidate.empty()) {
    out << ctx->primitive_root().to_string() << '\n';
    return kOk;
  }
  const Residue candidate = ctx->reduce(parse_poly(cfg.candidate, ctx->field()));
  if (candidate.is_zero()) {
    out << "not primitive (zero modulo the prime)\n";
    return kOk;
  }
  const auto order = ctx->order(candidate);
  if (order == ctx->group_order()) {
    out << "primitive (order " << order << ")\n";
  } else {
    out << "not primitive (order " << order << " of " << ctx->group_order() << ")\n";
  }
  return kOk;
}

int cmd_irreducible(const Config& cfg, std::ostream& out) {
  auto field = make_field(cfg);
  if (!cfg.poly.empty() == (cfg.degree != 0)) throw ValidationError("give exactly one of --poly or --degree");
  if (cfg.degree != 0) {
    out << find_irreducible(cfg.degree, field).to_string() << '\n';
  } else {
    out << (is_irreducible(parse_poly(cfg.poly, field)) ? "true" : "false") << '\n';
  }
  return kOk;
}

void add_field_options(CLI::App* sub, Config& cfg) {
  sub->add_option("-p", cfg.p, "Characteristic of the coefficient field")->required();
  sub->add_option("-s", cfg.s, "Extension degree (q = p^s)");
  sub->add_option("--field-modulus", cfg.field_modulus, "Monic irreducible over F_p in u, e.g. \"u^2+u+1\"");
  sub->add_option("--max-exact-degree", cfg.limits.max_exact_degree, "Degree limit for exact polynomials");
}

void add_prime_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--prime", cfg.prime, "Monic irreducible in T, e.g. \"T^2+1\"");
  sub->add_option("--prime-degree", cfg.prime_degree, "Use the first monic irreducible of this degree");
  sub->add_option("--primitive-root", cfg.primitive_root, "Primitive root modulo the prime (searched if omitted)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Carlitz binomial coefficients modulo a prime of F_q[T]", "carlitz"};
  app.require_subcommand(1);

  auto* dist = app.add_subcommand("dist", "Distribution of binom(n, m)_C over the residue classes");
  add_field_options(dist, cfg);
  add_prime_options(dist, cfg);
  dist->add_option("-n", cfg.n, "Decimal n (any size)")->required();
  dist->add_option("--method", cfg.method, "fast | brute");
  dist->add_option("--output", cfg.output, "json | table | csv");
  dist->add_option("--cache", cfg.cache_path, "Base-table cache file (default: $CARLITZ_CACHE_DIR)");
  dist->add_option("--max-brute-n", cfg.limits.max_brute_n, "Largest n for the brute-force method");

  auto* check = app.add_subcommand("check", "Compare the fast and brute-force distributions for n <= max-n");
  add_field_options(check, cfg);
  add_prime_options(check, cfg);
  check->add_option("--max-n", cfg.max_n, "Largest n to check")->required();
  check->add_option("--cache", cfg.cache_path, "Base-table cache file (default: $CARLITZ_CACHE_DIR)");
  check->add_option("--max-brute-n", cfg.limits.max_brute_n, "Largest n for the brute-force method");

  auto* binom = app.add_subcommand("binom", "binom(n, m)_C modulo the prime, or exactly with --exact");
  add_field_options(binom, cfg);
  add_prime_options(binom, cfg);
  binom->add_option("-n", cfg.n, "Decimal n")->required();
  binom->add_option("-m", cfg.m, "Decimal m")->required();
  binom->add_flag("--exact", cfg.exact, "Exact value in F_q[T]");

  auto* factorial = app.add_subcommand("factorial", "n!_C modulo the prime, or exactly with --exact");
  add_field_options(factorial, cfg);
  add_prime_options(factorial, cfg);
  factorial->add_option("-n", cfg.n, "Decimal n")->required();
  factorial->add_flag("--exact", cfg.exact, "Exact value in F_q[T]");

  auto* primroot = app.add_subcommand("primroot", "Find a primitive root, or test --candidate");
  add_field_options(primroot, cfg);
  add_prime_options(primroot, cfg);
  primroot->add_option("--candidate", cfg.candidate, "Residue to test");

  auto* irreducible = app.add_subcommand("irreducible", "Test --poly for irreducibility or search --degree");
  add_field_options(irreducible, cfg);
  irreducible->add_option("--poly", cfg.poly, "Polynomial in T");
  irreducible->add_option("--degree", cfg.degree, "Print the first monic irreducible of this degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dist) return cmd_dist(cfg, out);
    if (*check) return cmd_check(cfg, out);
    if (*binom) return cmd_binom(cfg, out);
    if (*factorial) return cmd_factorial(cfg, out);
    if (*primroot) return cmd_primroot(cfg, out);
    if (*irreducible) return cmd_irreducible(cfg, out);
  } catch (const GuardrailError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardrail;
  } catch (const IntegrityError& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace carlitz::cli
