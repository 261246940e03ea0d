#include "carlitz/gf.hpp"

#include <algorithm>

#include "carlitz/error.hpp"
#include "carlitz/poly.hpp"
#include "text.hpp"

namespace carlitz {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 31;
constexpr std::uint32_t kMaxTabulated = 1u << 16;

std::uint32_t checked_order(std::uint32_t p, unsigned s) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    q *= p;
    if (q >= kMaxOrder) {
      throw ValidationError("field order " + std::to_string(p) + "^" + std::to_string(s) +
                            " is too large (must be < 2^31)");
    }
  }
  return static_cast<std::uint32_t>(q);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldPtr Field::create(std::uint32_t p, unsigned s,
                       std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
  if (s == 0) throw ValidationError("extension degree must be positive");
  checked_order(p, s);

  if (s == 1) {
    if (modulus && !modulus->empty()) {
      // A degree-1 modulus u + c is accepted and ignored: F_p[u]/(u + c) = F_p.
      if (modulus->size() != 2 || (*modulus)[1] != 1) {
        throw ValidationError("field modulus must be monic of degree 1 for s = 1");
      }
    }
    return FieldPtr(new Field(p, 1, {}));
  }

  auto prime_field = Field::create(p, 1);
  Poly chosen(prime_field);
  if (modulus) {
    if (modulus->size() != s + 1) {
      throw ValidationError("field modulus must have degree " + std::to_string(s));
    }
    for (auto c : *modulus) {
      if (c >= p) throw ValidationError("field modulus coefficient outside [0, p)");
    }
    if (modulus->back() != 1) throw ValidationError("field modulus is not monic");
    chosen = Poly(prime_field, *modulus);
    if (!is_irreducible(chosen)) throw ValidationError("field modulus is reducible");
  } else {
    chosen = find_irreducible(s, prime_field);
  }
  std::vector<std::uint32_t> coeffs(chosen.coeffs().begin(), chosen.coeffs().end());
  return FieldPtr(new Field(p, s, std::move(coeffs)));
}

Field::Field(std::uint32_t p, unsigned s, std::vector<std::uint32_t> modulus)
    : p_(p), s_(s), q_(checked_order(p, s)), modulus_(std::move(modulus)) {
  if (s_ > 1 && q_ <= kMaxTabulated) build_tables();
}

void Field::build_tables() {
  // Find a generator of F_q^* by trial: an element whose order is q-1.
  const std::uint32_t n = q_ - 1;
  std::vector<std::uint32_t> primes;
  for (std::uint32_t m = n, d = 2; m > 1; ++d) {
    if (d * d > m) {
      primes.push_back(m);
      break;
    }
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  Code generator = 0;
  for (Code g = 2; g < q_ && generator == 0; ++g) {
    bool ok = true;
    for (auto l : primes) {
      Code x = 1, base = g;
      for (std::uint32_t e = n / l; e; e >>= 1) {
        if (e & 1) x = mul_slow(x, base);
        base = mul_slow(base, base);
      }
      if (x == 1) {
        ok = false;
        break;
      }
    }
    if (ok) generator = g;
  }
  exp_.resize(n);
  log_.assign(q_, 0);
  Code x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_slow(x, generator);
  }
}

Field::Code Field::add(Code a, Code b) const {
  if (s_ == 1) {
    std::uint32_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  if (p_ == 2) return a ^ b;
  Code out = 0, place = 1;
  for (unsigned i = 0; i < s_; ++i) {
    Code d = (a % p_ + b % p_) % p_;
    out += d * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Field::Code Field::neg(Code a) const {
  if (s_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Code out = 0, place = 1;
  for (unsigned i = 0; i < s_; ++i) {
    Code d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::mul(Code a, Code b) const {
  if (s_ == 1) return static_cast<Code>(static_cast<std::uint64_t>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  return mul_slow(a, b);
}

// Schoolbook product of u-polynomials reduced by the monic modulus.
Field::Code Field::mul_slow(Code a, Code b) const {
  auto x = coords(a), y = coords(b);
  std::vector<std::uint64_t> prod(2 * s_ - 1, 0);
  for (unsigned i = 0; i < s_; ++i) {
    for (unsigned j = 0; j < s_; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_;
    }
  }
  for (std::size_t k = prod.size(); k-- > s_;) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < s_; ++i) {
      prod[k - s_ + i] = (prod[k - s_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  std::vector<std::uint32_t> out(prod.begin(), prod.begin() + s_);
  return from_coords(out);
}

Field::Code Field::pow(Code a, std::uint64_t e) const {
  Code result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Field::Code Field::inv(Code a) const {
  if (a == 0) throw DomainError("division by zero in F_" + std::to_string(q_));
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

std::vector<std::uint32_t> Field::coords(Code a) const {
  std::vector<std::uint32_t> out(s_);
  for (unsigned i = 0; i < s_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Field::Code Field::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() > s_) throw ValidationError("too many coordinates for F_" + std::to_string(q_));
  Code out = 0, place = 1;
  for (auto c : coords) {
    if (c >= p_) throw ValidationError("coordinate outside [0, p)");
    out += c * place;
    place *= p_;
  }
  return out;
}

std::string Field::format(Code a) const {
  if (s_ == 1) return std::to_string(a);
  auto c = coords(a);
  std::string out;
  for (unsigned k = s_; k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c[k]);
      continue;
    }
    if (c[k] != 1) out += std::to_string(c[k]) + "*";
    out += 'u';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

Field::Code Field::parse(std::string_view text) const {
  text::Cursor in(text);
  Code value = text::parse_upoly(in, *this);
  if (!in.done()) in.fail("unexpected trailing input");
  return value;
}

std::string Field::modulus_text() const {
  if (s_ == 1) return {};
  std::string out;
  for (unsigned k = s_ + 1; k-- > 0;) {
    auto c = modulus_[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += 'u';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

FieldElement::FieldElement(FieldPtr field, Field::Code code)
    : field_(std::move(field)), code_(code) {
  if (!field_) throw ValidationError("field element without a field");
  if (code_ >= field_->order()) throw ValidationError("field element code outside [0, q)");
}

FieldElement FieldElement::from_coords(FieldPtr field, std::span<const std::uint32_t> coords) {
  auto code = field->from_coords(coords);
  return {std::move(field), code};
}

FieldElement FieldElement::parse(FieldPtr field, std::string_view text) {
  auto code = field->parse(text);
  return {std::move(field), code};
}

void FieldElement::check_same(const FieldElement& rhs) const {
  if (!same_field(field_, rhs.field_)) throw ValidationError("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->add(code_, rhs.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->sub(code_, rhs.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->mul(code_, rhs.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

}  // namespace carlitz
