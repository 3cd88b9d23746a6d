#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "artin/error.hpp"
#include "artin/fields.hpp"

namespace artin {

// Element of F[t, t^-1], stored densely from its lowest exponent.
template <Field F>
class LaurentPoly {
 public:
  using Element = typename F::Element;

  explicit LaurentPoly(F field) : field_(std::move(field)) {}

  static LaurentPoly monomial(const F& field, Element c, int exponent) {
    LaurentPoly p(field);
    if (!field.is_zero(c)) {
      p.low_ = exponent;
      p.coeffs_.push_back(std::move(c));
    }
    return p;
  }
  static LaurentPoly constant(const F& field, long c) { return monomial(field, field.from_int(c), 0); }
  static LaurentPoly t_power(const F& field, int e) { return monomial(field, field.one(), e); }

  const F& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  // Degree of the polynomial after shifting the lowest exponent to 0.
  int span() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_unit() const { return coeffs_.size() == 1; }
  Element coefficient(int e) const {
    if (is_zero() || e < low_ || e > high()) return field_.zero();
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }
  const Element& leading() const { return coeffs_.back(); }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_) c = field_.neg(c);
    return out;
  }

  LaurentPoly operator+(const LaurentPoly& o) const { return combine(o, false); }
  LaurentPoly operator-(const LaurentPoly& o) const { return combine(o, true); }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }

  LaurentPoly operator*(const LaurentPoly& o) const {
    require_same_field(o);
    LaurentPoly out(field_);
    if (is_zero() || o.is_zero()) return out;
    out.low_ = low_ + o.low_;
    out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (field_.is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        out.coeffs_[i + j] = field_.add(out.coeffs_[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
      }
    }
    out.trim();
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const Element& c) const {
    LaurentPoly out = *this;
    for (auto& x : out.coeffs_) x = field_.mul(x, c);
    out.trim();
    return out;
  }

  LaurentPoly shifted(int e) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) out.low_ += e;
    return out;
  }

  // Euclidean division in F[t^+-1]: *this = q * d + r with span(r) < span(d).
  std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& d) const {
    require_same_field(d);
    if (d.is_zero()) throw Error(ErrorCode::InvariantBreach, "Laurent division by zero");
    LaurentPoly q(field_);
    if (is_zero()) return {q, *this};
    // Work with polynomials in t with nonzero constant terms.
    std::vector<Element> a = coeffs_;
    const auto& b = d.coeffs_;
    const Element lead_inv = field_.inv(b.back());
    if (a.size() >= b.size()) {
      std::vector<Element> quot(a.size() - b.size() + 1, field_.zero());
      for (std::size_t i = a.size(); i-- > b.size() - 1;) {
        Element c = field_.mul(a[i], lead_inv);
        quot[i - (b.size() - 1)] = c;
        if (field_.is_zero(c)) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
          auto& slot = a[i - (b.size() - 1) + j];
          slot = field_.sub(slot, field_.mul(c, b[j]));
        }
      }
      q.coeffs_ = std::move(quot);
      q.low_ = low_ - d.low_;
      q.trim();
    }
    LaurentPoly r(field_);
    r.coeffs_ = std::move(a);
    r.low_ = low_;
    r.trim();
    return {q, r};
  }

  // Unit u = c * t^k with u * (*this) monic with lowest exponent 0.
  LaurentPoly normalizing_unit() const {
    if (is_zero()) return constant(field_, 1);
    return monomial(field_, field_.inv(leading()), -low_);
  }
  LaurentPoly normalized() const { return *this * normalizing_unit(); }

  bool operator==(const LaurentPoly& o) const {
    if (!(field_ == o.field_) || coeffs_.size() != o.coeffs_.size()) return false;
    if (is_zero()) return true;
    if (low_ != o.low_) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!field_.equal(coeffs_[i], o.coeffs_[i])) return false;
    }
    return true;
  }

  // Increasing powers of t, e.g. "2 - 2*t" or "1 + t^-1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Element& c = coeffs_[i];
      if (field_.is_zero(c)) continue;
      const int e = low_ + static_cast<int>(i);
      std::string text = field_.format(c);
      bool negative = !text.empty() && text[0] == '-' && text.find_first_of("+-", 1) == std::string::npos;
      if (negative) text = text.substr(1);
      const bool compound = text.find_first_of("+-", 1) != std::string::npos;
      if (compound) text = "(" + text + ")";
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (e == 0) {
        out += text;
      } else {
        if (text != "1") out += text + "*";
        out += e == 1 ? "t" : "t^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  void require_same_field(const LaurentPoly& o) const {
    if (!(field_ == o.field_)) throw Error(ErrorCode::MixedFields, field_.name() + " vs " + o.field_.name());
  }

  LaurentPoly combine(const LaurentPoly& o, bool subtract) const {
    require_same_field(o);
    if (o.is_zero()) return *this;
    if (is_zero()) return subtract ? -o : o;
    LaurentPoly out(field_);
    out.low_ = std::min(low_, o.low_);
    const int top = std::max(high(), o.high());
    out.coeffs_.assign(static_cast<std::size_t>(top - out.low_ + 1), field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out.coeffs_[static_cast<std::size_t>(low_ - out.low_) + i] = coeffs_[i];
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      auto& slot = out.coeffs_[static_cast<std::size_t>(o.low_ - out.low_) + i];
      slot = subtract ? field_.sub(slot, o.coeffs_[i]) : field_.add(slot, o.coeffs_[i]);
    }
    out.trim();
    return out;
  }

  void trim() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && field_.is_zero(coeffs_[lead])) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  F field_;
  int low_ = 0;
  std::vector<Element> coeffs_;
};

}  // namespace artin
