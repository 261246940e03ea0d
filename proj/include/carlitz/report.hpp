#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "carlitz/dist.hpp"
#include "carlitz/residue.hpp"

namespace carlitz {

using Json = nlohmann::ordered_json;

// Everything needed to rebuild a residue context deterministically.
struct ContextKey {
  std::uint32_t p = 0;
  unsigned s = 0;
  std::string field_modulus;  // empty for prime fields
  std::string prime;
  std::string primitive_root;

  bool operator==(const ContextKey&) const = default;
};

ContextKey context_key(const ResidueCtx& ctx);
ResidueCtxPtr context_from_key(const ContextKey& key);

// Parses a field modulus written as a u-polynomial ("u^2+u+1") into its
// coefficient list c_0..c_s over F_p.
std::vector<std::uint32_t> parse_field_modulus(std::string_view text, std::uint32_t p);

// Distribution JSON. Field order is fixed; big integers are decimal strings;
// only classes with a nonzero count are listed.
Json distribution_to_json(const ResidueCtx& ctx, const Distribution& dist);

struct ParsedDistribution {
  ResidueCtxPtr ctx;
  Distribution dist;
};
// Rebuilds the context from the recorded key and checks every entry against
// it. Throws ValidationError on malformed or inconsistent input.
ParsedDistribution distribution_from_json(const Json& j);

// "exponent,residue,count" rows for every class, then a final ",0,<zeros>"
// row for the zero class.
std::string distribution_csv(const Distribution& dist);
// Human-readable; not a stable format.
std::string distribution_table(const ResidueCtx& ctx, const Distribution& dist);

Json base_table_to_json(const ResidueCtx& ctx, const BaseTable& table);
// Empty when the payload belongs to a different context or fails the shape
// and G_d(1) = d + 1 checks.
std::optional<BaseTable> base_table_from_json(const Json& j, const ResidueCtx& ctx);

std::filesystem::path default_cache_file(const std::filesystem::path& dir, const ResidueCtx& ctx);
std::optional<BaseTable> load_base_table(const std::filesystem::path& file, const ResidueCtx& ctx);
void save_base_table(const std::filesystem::path& file, const ResidueCtx& ctx, const BaseTable& table);

}  // namespace carlitz
