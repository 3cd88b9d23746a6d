#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/fields.hpp"

namespace artin {

using GroupElement = std::vector<unsigned>;

// G = C_{m_1} x ... x C_{m_r}, written additively with residue vectors.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<unsigned> orders);

  const std::vector<unsigned>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const;
  // Least common multiple of the factor orders.
  unsigned exponent() const;
  GroupElement identity() const { return GroupElement(orders_.size(), 0); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, long k) const;
  // Elements in lexicographic order of residue vectors.
  std::vector<GroupElement> elements() const;

  // The character with exponents k sends the i-th generator to zeta_{m_i}^{k_i};
  // returns e with mu_k(g) = zeta_M^e, M the exponent.
  unsigned character_exponent(const GroupElement& k, const GroupElement& g) const;

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<unsigned> orders_;
};

// Element of Q[G].
class GroupRingElement {
 public:
  GroupRingElement() = default;

  void add_term(const GroupElement& g, const Rational& c);
  const std::map<GroupElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  bool operator==(const GroupRingElement&) const = default;

 private:
  std::map<GroupElement, Rational> terms_;
};

// mu_k applied to x, as an element of Q(zeta_M).
CyclotomicElement evaluate_character(const FiniteAbelianGroup& group, const CyclotomicField& field,
                                     const GroupElement& k, const GroupRingElement& x);

struct IdealProperness {
  bool proper;
  // First character (in lexicographic order of exponents) killing every generator.
  std::optional<GroupElement> character;
};

// The ideal of C[G] generated by `generators` is proper exactly when some
// character of G kills all of them.
IdealProperness ideal_properness(const FiniteAbelianGroup& group,
                                 const std::vector<GroupRingElement>& generators);

}  // namespace artin
