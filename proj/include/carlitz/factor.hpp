#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace carlitz {

struct PrimePower {
  std::uint64_t prime;
  unsigned multiplicity;
  bool operator==(const PrimePower&) const = default;
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// Prime factorization in ascending order: trial division up to 10^6, then
// Pollard rho (Brent) with fixed seeds so results are reproducible.
std::vector<PrimePower> factorize(std::uint64_t n);

}  // namespace carlitz
