#include "carlitz/words.hpp"

#include "carlitz/error.hpp"

namespace carlitz {

Word::Word(std::vector<std::uint64_t> digits, std::uint64_t q, unsigned h)
    : digits_(std::move(digits)), q_(q), h_(h), radix_(1) {
  if (digits_.empty()) throw ValidationError("a word needs at least one digit");
  if (q < 2 || h == 0) throw ValidationError("word alphabet needs q >= 2 and h >= 1");
  for (unsigned i = 0; i < h; ++i) {
    if (radix_ > (std::uint64_t{1} << 62) / q) throw ValidationError("word alphabet too large");
    radix_ *= q;
  }
  for (auto d : digits_) {
    if (d >= radix_) throw ValidationError("word digit " + std::to_string(d) + " outside [0, q^h)");
  }
}

BigInt word_z(const Word& w) { return from_digits(w.digits(), w.radix()); }

Word word_concat(const Word& a, const Word& b) {
  if (a.q() != b.q() || a.h() != b.h()) throw ValidationError("concatenating words over different alphabets");
  std::vector<std::uint64_t> digits = a.digits();
  digits.insert(digits.end(), b.digits().begin(), b.digits().end());
  return Word(std::move(digits), a.q(), a.h());
}

Word word_of(const BigInt& u, std::uint64_t q, unsigned h) {
  Word probe({0}, q, h);
  return Word(to_digits(u, probe.radix()), q, h);
}

BigInt nat_tail(const BigInt& u, std::uint64_t s, std::uint64_t radix) {
  return shift_digits_down(u, radix, s);
}

BigInt nat_window(const BigInt& u, std::uint64_t r, std::uint64_t s, std::uint64_t radix) {
  BigInt out;
  const BigInt span = pow(from_u64(radix), r + 1);
  mpz_fdiv_r(out.get_mpz_t(), nat_tail(u, s, radix).get_mpz_t(), span.get_mpz_t());
  return out;
}

std::vector<std::uint64_t> enumerate_class_set(const Word& w, std::int64_t j, const DigitBinomCache& cache,
                                               std::uint64_t max_enumeration) {
  const auto& ctx = cache.ctx();
  if (w.radix() != ctx.size()) throw ValidationError("word alphabet does not match q^h of the context");
  const BigInt z = word_z(w);
  if (z > from_u64(max_enumeration)) {
    throw GuardrailError("z(w) = " + to_decimal(z) + " exceeds the enumeration limit " +
                         std::to_string(max_enumeration));
  }
  const auto n = static_cast<std::int64_t>(ctx.group_order());
  const auto target = static_cast<std::uint64_t>(((j % n) + n) % n);

  const std::uint64_t top = to_u64(z);
  const auto z_digits = w.digits();
  std::vector<std::uint64_t> u_digits(z_digits.size(), 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 0;; ++u) {
    if (binom_exponent_digits(z_digits, u_digits, cache) == target) out.push_back(u);
    if (u == top) break;
    for (auto& d : u_digits) {
      if (++d < w.radix()) break;
      d = 0;
    }
  }
  return out;
}

}  // namespace carlitz
