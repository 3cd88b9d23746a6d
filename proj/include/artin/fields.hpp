#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace artin {

using Integer = mpz_class;
using Rational = mpq_class;

template <class F>
concept Field = std::equality_comparable<F> &&
    requires(const F& f, const typename F::Element& a, long n) {
      { f.zero() } -> std::same_as<typename F::Element>;
      { f.one() } -> std::same_as<typename F::Element>;
      { f.from_int(n) } -> std::same_as<typename F::Element>;
      { f.add(a, a) } -> std::same_as<typename F::Element>;
      { f.sub(a, a) } -> std::same_as<typename F::Element>;
      { f.mul(a, a) } -> std::same_as<typename F::Element>;
      { f.neg(a) } -> std::same_as<typename F::Element>;
      { f.inv(a) } -> std::same_as<typename F::Element>;
      { f.is_zero(a) } -> std::same_as<bool>;
      { f.equal(a, a) } -> std::same_as<bool>;
      { f.format(a) } -> std::same_as<std::string>;
      { f.name() } -> std::same_as<std::string>;
    };

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long n) const { return n; }
  Element from_rational(const Rational& q) const { return q; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string format(const Element& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
  unsigned long characteristic() const { return 0; }

  bool operator==(const RationalField&) const = default;
};

// Integers modulo a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element from_int(long n) const;
  Element from_rational(const Rational& q) const;
  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return (p_ - a) % p_; }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  std::string format(Element a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p_); }
  unsigned long characteristic() const { return p_; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

// Q(zeta_m), elements stored as coordinate vectors in the power basis
// 1, z, ..., z^(d-1) where d = deg Phi_m.
struct CyclotomicElement {
  std::vector<Rational> coords;

  bool operator==(const CyclotomicElement&) const = default;
};

class CyclotomicField {
 public:
  using Element = CyclotomicElement;

  explicit CyclotomicField(unsigned m);

  unsigned conductor() const { return m_; }
  std::size_t degree() const { return modulus_->size() - 1; }

  Element zero() const;
  Element one() const;
  Element from_int(long n) const;
  Element from_rational(const Rational& q) const;
  // zeta_m^k for any integer k.
  Element root_of_unity(long k) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string format(const Element& a) const;
  std::string name() const { return "Q(zeta_" + std::to_string(m_) + ")"; }
  unsigned long characteristic() const { return 0; }

  bool operator==(const CyclotomicField& other) const { return m_ == other.m_; }

 private:
  Element reduce(std::vector<Rational> poly) const;

  unsigned m_;
  std::shared_ptr<const std::vector<Rational>> modulus_;  // Phi_m, low degree first
};

static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);
static_assert(Field<CyclotomicField>);

}  // namespace artin
