#include "artin/group_ring.hpp"

#include <numeric>

#include "artin/error.hpp"

namespace artin {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<unsigned> orders) : orders_(std::move(orders)) {
  for (unsigned m : orders_) {
    if (m == 0) throw Error(ErrorCode::SchemaError, "cyclic factor of order 0");
  }
}

std::size_t FiniteAbelianGroup::size() const {
  std::size_t s = 1;
  for (unsigned m : orders_) s *= m;
  return s;
}

unsigned FiniteAbelianGroup::exponent() const {
  unsigned e = 1;
  for (unsigned m : orders_) e = std::lcm(e, m);
  return e;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = (a[i] + b[i]) % orders_[i];
  return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  GroupElement out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = (orders_[i] - a[i] % orders_[i]) % orders_[i];
  return out;
}

GroupElement FiniteAbelianGroup::scale(const GroupElement& a, long k) const {
  GroupElement out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const long m = orders_[i];
    out[i] = static_cast<unsigned>((((k % m) * static_cast<long>(a[i])) % m + m) % m);
  }
  return out;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  GroupElement g = identity();
  for (;;) {
    out.push_back(g);
    std::size_t i = orders_.size();
    while (i > 0) {
      --i;
      if (++g[i] < orders_[i]) break;
      g[i] = 0;
      if (i == 0) return out;
    }
    if (orders_.empty()) return out;
  }
}

unsigned FiniteAbelianGroup::character_exponent(const GroupElement& k, const GroupElement& g) const {
  const unsigned big = exponent();
  unsigned long e = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e += static_cast<unsigned long>(k[i]) * g[i] * (big / orders_[i]);
  }
  return static_cast<unsigned>(e % big);
}

void GroupRingElement::add_term(const GroupElement& g, const Rational& c) {
  auto& slot = terms_[g];
  slot += c;
  if (sgn(slot) == 0) terms_.erase(g);
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.get_str() + "*";
    out += "g(";
    for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
    out += ")";
  }
  return out;
}

CyclotomicElement evaluate_character(const FiniteAbelianGroup& group, const CyclotomicField& field,
                                     const GroupElement& k, const GroupRingElement& x) {
  if (field.conductor() != group.exponent()) {
    throw Error(ErrorCode::MixedFields, "character values need Q(zeta_" + std::to_string(group.exponent()) + ")");
  }
  auto value = field.zero();
  for (const auto& [g, c] : x.terms()) {
    auto term = field.mul(field.from_rational(c), field.root_of_unity(group.character_exponent(k, g)));
    value = field.add(value, term);
  }
  return value;
}

IdealProperness ideal_properness(const FiniteAbelianGroup& group,
                                 const std::vector<GroupRingElement>& generators) {
  const CyclotomicField field(group.exponent());
  for (const auto& k : group.elements()) {
    bool kills_all = true;
    for (const auto& x : generators) {
      if (!field.is_zero(evaluate_character(group, field, k, x))) {
        kills_all = false;
        break;
      }
    }
    if (kills_all) return {true, k};
  }
  return {false, std::nullopt};
}

}  // namespace artin
