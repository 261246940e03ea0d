#pragma once

#include <cstdint>

namespace carlitz {

// Size limits for the operations whose cost grows with the input value
// rather than its digit count. Exceeding one raises GuardrailError.
struct Guardrails {
  // Degree bound for exact polynomials in A (D_i, n!_C, exact binomials).
  std::uint64_t max_exact_degree = 1'000'000;
  // Largest z(w) that enumerate_class_set will scan.
  std::uint64_t max_enumeration = 1'000'000;
  // Largest n accepted by the brute-force distribution.
  std::uint64_t max_brute_n = 10'000'000;
};

}  // namespace carlitz
