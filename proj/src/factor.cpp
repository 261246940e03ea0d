#include "carlitz/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace carlitz {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t rho(std::uint64_t n, std::uint64_t seed) {
  if (n % 2 == 0) return 2;
  const std::uint64_t c = seed;
  auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
  std::uint64_t y = seed + 1, g = 1, r = 1, q = 1, x = 0, ys = 0;
  constexpr std::uint64_t kBatch = 128;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
    r <<= 1;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  for (std::uint64_t seed = 1;; ++seed) {
    std::uint64_t d = rho(n, seed);
    if (d != n && d != 1) {
      split(d, out);
      split(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s && composite; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> found;
  for (std::uint64_t d = 2; d <= 1'000'000 && d * d <= n; ++d) {
    while (n % d == 0) {
      ++found[d];
      n /= d;
    }
  }
  split(n, found);
  std::vector<PrimePower> out;
  for (auto [p, k] : found) out.push_back({p, k});
  return out;
}

}  // namespace carlitz
