#include "artin/fields.hpp"

#include "artin/error.hpp"
#include "artin/number_theory.hpp"

namespace artin {

RationalField::Element RationalField::inv(const Element& a) const {
  if (is_zero(a)) throw Error(ErrorCode::InvariantBreach, "division by zero in Q");
  return 1 / a;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::SchemaError, "F_p needs a prime p < 2^31, got " + std::to_string(p));
  }
}

PrimeField::Element PrimeField::from_int(long n) const {
  const auto p = static_cast<long>(p_);
  return static_cast<Element>(((n % p) + p) % p);
}

PrimeField::Element PrimeField::from_rational(const Rational& q) const {
  Integer num = q.get_num() % static_cast<unsigned long>(p_);
  Integer den = q.get_den() % static_cast<unsigned long>(p_);
  if (den == 0) throw Error(ErrorCode::NonDiscreteCharacter, "denominator vanishes in " + name());
  return mul(from_int(num.get_si()), inv(from_int(den.get_si())));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) throw Error(ErrorCode::InvariantBreach, "division by zero in " + name());
  return pow(a, p_ - 2);
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Rational c = a[i] / lead;
    q[i - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
    if (i == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned m) : m_(m) {
  auto phi = cyclotomic_polynomial(m);
  auto coeffs = std::make_shared<std::vector<Rational>>();
  for (const auto& c : phi) coeffs->push_back(Rational(c));
  modulus_ = std::move(coeffs);
}

CyclotomicElement CyclotomicField::reduce(std::vector<Rational> poly) const {
  trim(poly);
  const std::size_t d = degree();
  const auto& mod = *modulus_;
  for (std::size_t i = poly.size(); i-- > d;) {
    Rational c = poly[i];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) poly[i - d + j] -= c * mod[j];
  }
  poly.resize(d, 0);
  return {std::move(poly)};
}

CyclotomicElement CyclotomicField::zero() const { return {std::vector<Rational>(degree(), 0)}; }

CyclotomicElement CyclotomicField::one() const { return from_int(1); }

CyclotomicElement CyclotomicField::from_int(long n) const { return from_rational(Rational(n)); }

CyclotomicElement CyclotomicField::from_rational(const Rational& q) const {
  auto e = zero();
  e.coords[0] = q;
  return e;
}

CyclotomicElement CyclotomicField::root_of_unity(long k) const {
  const long m = static_cast<long>(m_);
  const auto exponent = static_cast<std::size_t>(((k % m) + m) % m);
  std::vector<Rational> poly(exponent + 1, 0);
  poly[exponent] = 1;
  return reduce(std::move(poly));
}

CyclotomicElement CyclotomicField::add(const Element& a, const Element& b) const {
  Element out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

CyclotomicElement CyclotomicField::sub(const Element& a, const Element& b) const {
  Element out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

CyclotomicElement CyclotomicField::mul(const Element& a, const Element& b) const {
  return reduce(poly_mul(a.coords, b.coords));
}

CyclotomicElement CyclotomicField::neg(const Element& a) const {
  Element out = a;
  for (auto& c : out.coords) c = -c;
  return out;
}

bool CyclotomicField::is_zero(const Element& a) const {
  for (const auto& c : a.coords) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

CyclotomicElement CyclotomicField::inv(const Element& a) const {
  if (is_zero(a)) throw Error(ErrorCode::InvariantBreach, "division by zero in " + name());
  // Extended Euclid: find s with s*a = 1 mod Phi_m.
  Poly r0 = *modulus_, r1 = a.coords;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return reduce(std::move(s1));
}

std::string CyclotomicField::format(const Element& a) const {
  std::string out;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const Rational& c = a.coords[i];
    if (sgn(c) == 0) continue;
    std::string mag = Rational(abs(c)).get_str();
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    if (i == 0) {
      out += mag;
    } else {
      if (abs(c) != 1) out += mag + "*";
      out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace artin
