#include "carlitz/poly.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "carlitz/error.hpp"
#include "text.hpp"

namespace carlitz {

namespace {

constexpr std::uint64_t kMaxParsedExponent = 100'000'000;

// True when `terms` products of values below p can be summed in 64 bits.
bool fits_lazy(std::uint64_t p, std::size_t terms) {
  const std::uint64_t sq = (p - 1) * (p - 1);
  return sq == 0 || terms <= (std::numeric_limits<std::uint64_t>::max() >> 1) / sq;
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw ValidationError("polynomial without a field");
}

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw ValidationError("polynomial without a field");
  for (auto c : coeffs_) {
    if (c >= field_->order()) throw ValidationError("polynomial coefficient outside the field");
  }
  trim();
}

Poly Poly::constant(FieldPtr field, Code c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Code c, std::size_t power) {
  std::vector<Code> coeffs(power + 1, 0);
  coeffs[power] = c;
  return Poly(std::move(field), std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_same(const Poly& rhs) const {
  if (!same_field(field_, rhs.field_)) throw ValidationError("polynomials over different fields");
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Poly Poly::scaled(Code c) const {
  std::vector<Code> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::operator+(const Poly& rhs) const {
  check_same(rhs);
  std::vector<Code> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coeff(i), rhs.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
  check_same(rhs);
  std::vector<Code> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(coeff(i), rhs.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Code> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->neg(coeffs_[i]);
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
  check_same(rhs);
  if (is_zero() || rhs.is_zero()) return Poly(field_);
  const auto& a = coeffs_;
  const auto& b = rhs.coeffs_;
  const std::size_t n = a.size() + b.size() - 1;
  std::vector<Code> out(n, 0);
  const std::uint64_t p = field_->characteristic();

  if (field_->is_prime_field() && fits_lazy(p, std::min(a.size(), b.size()))) {
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      std::uint64_t* row = acc.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Code>(acc[k] % p);
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] = field_->add(out[i + j], field_->mul(a[i], b[j]));
      }
    }
  }
  return Poly(field_, std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Code c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    std::string coeff_text = field_->format(c);
    if (k == 0) {
      out += coeff_text;
      continue;
    }
    if (c != 1) {
      if (coeff_text.find('+') == std::string::npos) {
        out += coeff_text + "*";
      } else {
        out += "(" + coeff_text + ")*";
      }
    }
    out += 'T';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (!same_field(a.field(), b.field())) throw ValidationError("polynomials over different fields");
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto& field = a.field();
  if (a.coeffs().size() < b.coeffs().size()) return {Poly(field), a};

  const std::size_t db = b.coeffs().size() - 1;
  const std::size_t dq = a.coeffs().size() - 1 - db;
  const auto lead_inv = field->inv(b.leading());
  const auto& bc = b.coeffs();
  std::vector<Poly::Code> quotient(dq + 1, 0);
  const std::uint64_t p = field->characteristic();

  if (field->is_prime_field() && fits_lazy(p, db + 1)) {
    // Remainder entries accumulate unreduced; each receives at most db
    // additions before it becomes the leading term.
    std::vector<std::uint64_t> r(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = r.size(); i-- > db;) {
      const std::uint64_t c = r[i] % p;
      const std::uint64_t qc = c * lead_inv % p;
      quotient[i - db] = static_cast<Poly::Code>(qc);
      if (qc == 0) continue;
      const std::uint64_t neg = p - qc;
      std::uint64_t* row = r.data() + (i - db);
      for (std::size_t j = 0; j < db; ++j) row[j] += neg * bc[j];
    }
    std::vector<Poly::Code> remainder(db);
    for (std::size_t j = 0; j < db; ++j) remainder[j] = static_cast<Poly::Code>(r[j] % p);
    return {Poly(field, std::move(quotient)), Poly(field, std::move(remainder))};
  }

  std::vector<Poly::Code> r(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = r.size(); i-- > db;) {
    const auto qc = field->mul(r[i], lead_inv);
    quotient[i - db] = qc;
    if (qc == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[i - db + j] = field->sub(r[i - db + j], field->mul(qc, bc[j]));
    }
  }
  r.resize(db);
  return {Poly(field, std::move(quotient)), Poly(field, std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  const auto& field = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(field), s1 = Poly::zero(field);
  Poly t0 = Poly::zero(field), t1 = Poly::one(field);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const auto scale = field->inv(r0.leading());
  return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& m) {
  if (m.is_zero()) throw DomainError("powmod with zero modulus");
  if (e < 0) throw DomainError("powmod with negative exponent");
  const auto& field = base.field();
  Poly result = rem(Poly::one(field), m);
  Poly b = rem(base, m);
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(result * result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, m);
  }
  return result;
}

bool is_irreducible(const Poly& f) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) throw ValidationError("irreducibility test on a constant polynomial");
  const std::size_t d = *deg;
  if (d == 1) return true;
  const Poly g = f.monic();
  const auto& field = f.field();
  const BigInt q = from_u64(field->order());
  const Poly t = Poly::variable(field);

  // frob[k] = T^{q^k} mod g
  std::vector<Poly> frob{rem(t, g)};
  for (std::size_t k = 1; k <= d; ++k) frob.push_back(powmod(frob.back(), q, g));
  if (!(frob[d] == rem(t, g))) return false;

  std::size_t m = d;
  for (std::size_t l = 2; l <= m; ++l) {
    if (m % l != 0) continue;
    while (m % l == 0) m /= l;
    if (!gcd(frob[d / l] - t, g).is_one()) return false;
  }
  return true;
}

Poly find_irreducible(unsigned h, const FieldPtr& field) {
  if (h == 0) throw ValidationError("irreducible search needs degree >= 1");
  const std::uint64_t q = field->order();
  for (std::uint64_t code = 0;; ++code) {
    std::vector<Poly::Code> coeffs(h + 1, 0);
    std::uint64_t rest = code;
    for (unsigned i = 0; i < h; ++i) {
      coeffs[i] = static_cast<Poly::Code>(rest % q);
      rest /= q;
    }
    if (rest != 0) break;
    coeffs[h] = 1;
    Poly candidate(field, std::move(coeffs));
    if (is_irreducible(candidate)) return candidate;
  }
  throw IntegrityError("no irreducible polynomial of degree " + std::to_string(h));
}

Poly parse_poly(std::string_view source, const FieldPtr& field) {
  text::Cursor in(source);
  std::vector<Poly::Code> coeffs;
  auto add_term = [&](Poly::Code c, std::uint64_t power) {
    if (power >= coeffs.size()) coeffs.resize(power + 1, 0);
    coeffs[power] = field->add(coeffs[power], c);
  };

  // term := factor ('*' factor)*, at most one of which is a T-monomial.
  auto parse_term = [&] {
    Poly::Code coeff = 1;
    std::uint64_t power = 0;
    bool seen_mono = false;
    do {
      if (in.at_digit()) {
        coeff = field->mul(coeff, field->from_integer(in.uint_mod(field->characteristic())));
      } else if (in.accept('(')) {
        coeff = field->mul(coeff, text::parse_upoly(in, *field));
        in.expect(')');
      } else if (in.peek() == 'u') {
        std::vector<std::uint64_t> coords(field->degree(), 0);
        text::parse_uterm(in, *field, coords);
        std::vector<std::uint32_t> narrow(coords.begin(), coords.end());
        coeff = field->mul(coeff, field->from_coords(narrow));
      } else if (in.accept('T')) {
        if (seen_mono) in.fail("more than one power of T in a term");
        seen_mono = true;
        power = 1;
        if (in.accept('^')) power = in.exponent();
        if (power > kMaxParsedExponent) in.fail("exponent too large");
      } else {
        in.fail("expected a coefficient or T");
      }
    } while (in.accept('*'));
    add_term(coeff, power);
  };

  parse_term();
  while (in.accept('+')) parse_term();
  if (!in.done()) in.fail("unexpected trailing input");
  return Poly(field, std::move(coeffs));
}

}  // namespace carlitz
