#include "carlitz/report.hpp"

#include <fstream>
#include <sstream>

#include "carlitz/error.hpp"

namespace carlitz {

namespace {

constexpr const char* kTableFormat = "carlitz-base-table/1";

std::string require_string(const Json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_string()) {
    throw ValidationError(std::string("JSON field '") + name + "' must be a string");
  }
  return j[name].get<std::string>();
}

std::uint64_t require_uint(const Json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_unsigned()) {
    throw ValidationError(std::string("JSON field '") + name + "' must be a nonnegative integer");
  }
  return j[name].get<std::uint64_t>();
}

Json key_to_json(const ContextKey& key) {
  Json j;
  j["p"] = key.p;
  j["s"] = key.s;
  j["field_modulus"] = key.field_modulus.empty() ? Json(nullptr) : Json(key.field_modulus);
  j["prime"] = key.prime;
  j["primitive_root"] = key.primitive_root;
  return j;
}

ContextKey key_from_json(const Json& j) {
  ContextKey key;
  key.p = static_cast<std::uint32_t>(require_uint(j, "p"));
  key.s = static_cast<unsigned>(require_uint(j, "s"));
  if (j.contains("field_modulus") && !j["field_modulus"].is_null()) key.field_modulus = require_string(j, "field_modulus");
  key.prime = require_string(j, "prime");
  key.primitive_root = require_string(j, "primitive_root");
  return key;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

}  // namespace

ContextKey context_key(const ResidueCtx& ctx) {
  const auto& field = *ctx.field();
  return {field.characteristic(), field.degree(), field.modulus_text(), ctx.prime().to_string(),
          ctx.primitive_root().to_string()};
}

std::vector<std::uint32_t> parse_field_modulus(std::string_view text, std::uint32_t p) {
  std::string as_t(text);
  for (auto& c : as_t) {
    if (c == 'u') {
      c = 'T';
    } else if (c == 'T') {
      throw ValidationError("field modulus must be written in u");
    }
  }
  const Poly modulus = parse_poly(as_t, Field::create(p, 1));
  return {modulus.coeffs().begin(), modulus.coeffs().end()};
}

ResidueCtxPtr context_from_key(const ContextKey& key) {
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!key.field_modulus.empty()) modulus = parse_field_modulus(key.field_modulus, key.p);
  auto field = Field::create(key.p, key.s, modulus);
  return ResidueCtx::create(parse_poly(key.prime, field), parse_poly(key.primitive_root, field));
}

Json distribution_to_json(const ResidueCtx& ctx, const Distribution& dist) {
  const auto key = context_key(ctx);
  Json j;
  j["p"] = key.p;
  j["s"] = key.s;
  j["field_modulus"] = key.field_modulus.empty() ? Json(nullptr) : Json(key.field_modulus);
  j["prime"] = key.prime;
  j["h"] = ctx.degree();
  j["primitive_root"] = key.primitive_root;
  j["group_order"] = std::to_string(ctx.group_order());
  j["n"] = to_decimal(dist.n);
  j["method"] = std::string(method_name(dist.method));
  Json counts = Json::array();
  for (std::size_t e = 0; e < dist.counts.size(); ++e) {
    if (dist.counts[e] == 0) continue;
    Json entry;
    entry["exponent"] = e;
    entry["residue"] = dist.residue_labels.at(e);
    entry["count"] = to_decimal(dist.counts[e]);
    counts.push_back(std::move(entry));
  }
  j["counts"] = std::move(counts);
  j["zero_count"] = to_decimal(dist.zero_count);
  return j;
}

ParsedDistribution distribution_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("distribution JSON must be an object");
  auto ctx = context_from_key(key_from_json(j));
  if (require_uint(j, "h") != ctx->degree()) throw ValidationError("recorded h does not match the prime");
  if (require_string(j, "group_order") != std::to_string(ctx->group_order())) {
    throw ValidationError("recorded group_order does not match the prime");
  }

  Distribution dist;
  dist.n = parse_natural(require_string(j, "n"));
  dist.method = parse_method(require_string(j, "method"));
  dist.zero_count = parse_natural(require_string(j, "zero_count"));
  dist.residue_labels = residue_labels(*ctx);
  dist.counts = CountPoly(ctx->group_order());
  if (!j.contains("counts") || !j["counts"].is_array()) throw ValidationError("JSON field 'counts' must be an array");
  for (const auto& entry : j["counts"]) {
    const auto e = require_uint(entry, "exponent");
    if (e >= ctx->group_order()) throw ValidationError("count exponent out of range");
    if (require_string(entry, "residue") != dist.residue_labels[e]) {
      throw ValidationError("residue label for exponent " + std::to_string(e) + " does not match the context");
    }
    dist.counts[e] = parse_natural(require_string(entry, "count"));
  }
  return {std::move(ctx), std::move(dist)};
}

std::string distribution_csv(const Distribution& dist) {
  std::ostringstream out;
  out << "exponent,residue,count\n";
  for (std::size_t e = 0; e < dist.counts.size(); ++e) {
    out << e << ',' << dist.residue_labels.at(e) << ',' << to_decimal(dist.counts[e]) << '\n';
  }
  out << ",0," << to_decimal(dist.zero_count) << '\n';
  return out.str();
}

std::string distribution_table(const ResidueCtx& ctx, const Distribution& dist) {
  std::ostringstream out;
  out << "A = F_" << ctx.field()->order() << "[T], prime " << ctx.prime().to_string() << " (h = " << ctx.degree()
      << "), primitive root " << ctx.primitive_root().to_string() << "\n";
  out << "n = " << to_decimal(dist.n) << " (" << method_name(dist.method) << ")\n";
  out << "G_n(x) = " << dist.counts.to_string() << "\n\n";
  out << "  j  residue  count\n";
  for (std::size_t e = 0; e < dist.counts.size(); ++e) {
    if (dist.counts[e] == 0) continue;
    out << "  " << e << "  " << dist.residue_labels.at(e) << "  " << to_decimal(dist.counts[e]) << '\n';
  }
  out << "  -  0  " << to_decimal(dist.zero_count) << '\n';
  return out.str();
}

Json base_table_to_json(const ResidueCtx& ctx, const BaseTable& table) {
  Json j;
  j["format"] = kTableFormat;
  j["key"] = key_to_json(context_key(ctx));
  Json rows = Json::array();
  for (const auto& g : table) {
    Json row = Json::array();
    for (const auto& c : g.coeffs()) row.push_back(to_decimal(c));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

std::optional<BaseTable> base_table_from_json(const Json& j, const ResidueCtx& ctx) {
  try {
    if (!j.is_object() || j.value("format", "") != kTableFormat) return std::nullopt;
    if (!j.contains("key") || key_from_json(j["key"]) != context_key(ctx)) return std::nullopt;
    const auto& rows = j.at("table");
    if (!rows.is_array() || rows.size() != ctx.size()) return std::nullopt;
    BaseTable table;
    table.reserve(rows.size());
    for (std::size_t d = 0; d < rows.size(); ++d) {
      const auto& row = rows[d];
      if (!row.is_array() || row.size() != ctx.group_order()) return std::nullopt;
      std::vector<BigInt> coeffs;
      coeffs.reserve(row.size());
      for (const auto& c : row) {
        if (!c.is_string()) return std::nullopt;
        coeffs.push_back(parse_natural(c.get<std::string>()));
      }
      CountPoly g(std::move(coeffs));
      if (g.at_one() != from_u64(d + 1)) return std::nullopt;
      table.push_back(std::move(g));
    }
    return table;
  } catch (const Error&) {
    return std::nullopt;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

std::filesystem::path default_cache_file(const std::filesystem::path& dir, const ResidueCtx& ctx) {
  const auto key = context_key(ctx);
  const std::string text = key_to_json(key).dump();
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return dir / ("carlitz-base-p" + std::to_string(key.p) + "-s" + std::to_string(key.s) + "-h" +
                std::to_string(ctx.degree()) + "-" + hash + ".json");
}

std::optional<BaseTable> load_base_table(const std::filesystem::path& file, const ResidueCtx& ctx) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return std::nullopt;
  return base_table_from_json(j, ctx);
}

void save_base_table(const std::filesystem::path& file, const ResidueCtx& ctx, const BaseTable& table) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write base-table cache " + tmp);
    out << base_table_to_json(ctx, table).dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace carlitz
