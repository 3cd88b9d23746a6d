#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "artin/error.hpp"
#include "artin/fields.hpp"
#include "artin/laurent.hpp"
#include "artin/number_theory.hpp"

namespace artin {

template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

template <class R>
concept EuclideanRing = requires(const R& r, const typename R::Element& a) {
  { r.zero() } -> std::same_as<typename R::Element>;
  { r.one() } -> std::same_as<typename R::Element>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.norm(a) } -> std::convertible_to<long>;
  { r.divmod(a, a) } -> std::same_as<std::pair<typename R::Element, typename R::Element>>;
  { r.add(a, a) } -> std::same_as<typename R::Element>;
  { r.sub(a, a) } -> std::same_as<typename R::Element>;
  { r.mul(a, a) } -> std::same_as<typename R::Element>;
  // Unit u with u * a in normal form, and its inverse.
  { r.normalizing_unit(a) } -> std::same_as<std::pair<typename R::Element, typename R::Element>>;
};

struct IntegerRing {
  using Element = Integer;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  long norm(const Element& a) const;
  std::pair<Element, Element> divmod(const Element& a, const Element& b) const;
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  std::pair<Element, Element> normalizing_unit(const Element& a) const {
    return sgn(a) < 0 ? std::pair<Element, Element>{-1, -1} : std::pair<Element, Element>{1, 1};
  }
};

template <Field F>
struct LaurentRing {
  using Element = LaurentPoly<F>;

  F field;

  Element zero() const { return Element(field); }
  Element one() const { return Element::constant(field, 1); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  long norm(const Element& a) const { return a.span(); }
  std::pair<Element, Element> divmod(const Element& a, const Element& b) const { return a.divmod(b); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  std::pair<Element, Element> normalizing_unit(const Element& a) const {
    if (a.is_zero()) return {one(), one()};
    Element u = a.normalizing_unit();
    Element u_inv = Element::monomial(field, field.inv(u.coefficient(u.low())), -u.low());
    return {u, u_inv};
  }
  // Rational constant making all coefficients of `entries` coprime integers,
  // with its inverse. Keeps elimination over characteristic 0 from blowing up.
  std::optional<std::pair<Element, Element>> content_unit(const std::vector<const Element*>& entries) const {
    if constexpr (std::is_same_v<F, RationalField> || std::is_same_v<F, CyclotomicField>) {
      auto for_each_rational = [&](auto&& visit) {
        for (const Element* e : entries) {
          for (int k = e->low(); !e->is_zero() && k <= e->high(); ++k) {
            const auto c = e->coefficient(k);
            if constexpr (std::is_same_v<F, RationalField>) {
              visit(c);
            } else {
              for (const auto& q : c.coords) visit(q);
            }
          }
        }
      };
      mpz_class den = 1;
      for_each_rational([&](const Rational& q) {
        if (q != 0) den = lcm(den, mpz_class(q.get_den()));
      });
      mpz_class num = 0;
      for_each_rational([&](const Rational& q) {
        if (q != 0) num = gcd(num, mpz_class(q.get_num() * (den / q.get_den())));
      });
      if (num == 0 || den == num) return std::nullopt;
      const Rational scale(den, num);
      const Rational inverse(num, den);
      return std::pair{Element::monomial(field, field.from_rational(scale), 0),
                       Element::monomial(field, field.from_rational(inverse), 0)};
    } else {
      return std::nullopt;
    }
  }
};

template <class T>
struct SmithForm {
  // Diagonal of D, length min(rows, cols); nonzero entries first, each
  // normalized and dividing the next.
  std::vector<T> diagonal;
  std::size_t rank = 0;
  // U * A * V = D, with U_inv, V_inv the inverses of U and V.
  std::optional<Matrix<T>> u, v, u_inv, v_inv;
};

template <EuclideanRing R>
SmithForm<typename R::Element> smith_normal_form(const R& ring, Matrix<typename R::Element> a,
                                                 bool with_transforms = false) {
  using T = typename R::Element;
  const std::size_t m = a.rows(), n = a.cols();
  auto identity = [&](std::size_t k) {
    Matrix<T> id(k, k, ring.zero());
    for (std::size_t i = 0; i < k; ++i) id(i, i) = ring.one();
    return id;
  };
  std::optional<Matrix<T>> u, v, u_inv, v_inv;
  if (with_transforms) {
    u = identity(m);
    u_inv = identity(m);
    v = identity(n);
    v_inv = identity(n);
  }

  // Elementary operations, mirrored on the transforms.
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    if (u) {
      for (std::size_t k = 0; k < m; ++k) std::swap((*u)(i, k), (*u)(j, k));
      for (std::size_t k = 0; k < m; ++k) std::swap((*u_inv)(k, i), (*u_inv)(k, j));
    }
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m; ++k) std::swap(a(k, i), a(k, j));
    if (v) {
      for (std::size_t k = 0; k < n; ++k) std::swap((*v)(k, i), (*v)(k, j));
      for (std::size_t k = 0; k < n; ++k) std::swap((*v_inv)(i, k), (*v_inv)(j, k));
    }
  };
  // row_i += c * row_j
  auto add_row = [&](std::size_t i, std::size_t j, const T& c) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!ring.is_zero(a(j, k))) a(i, k) = ring.add(a(i, k), ring.mul(c, a(j, k)));
    }
    if (u) {
      for (std::size_t k = 0; k < m; ++k) (*u)(i, k) = ring.add((*u)(i, k), ring.mul(c, (*u)(j, k)));
      for (std::size_t k = 0; k < m; ++k) {
        (*u_inv)(k, j) = ring.sub((*u_inv)(k, j), ring.mul((*u_inv)(k, i), c));
      }
    }
  };
  // col_i += c * col_j
  auto add_col = [&](std::size_t i, std::size_t j, const T& c) {
    for (std::size_t k = 0; k < m; ++k) {
      if (!ring.is_zero(a(k, j))) a(k, i) = ring.add(a(k, i), ring.mul(c, a(k, j)));
    }
    if (v) {
      for (std::size_t k = 0; k < n; ++k) (*v)(k, i) = ring.add((*v)(k, i), ring.mul(c, (*v)(k, j)));
      for (std::size_t k = 0; k < n; ++k) {
        (*v_inv)(j, k) = ring.sub((*v_inv)(j, k), ring.mul(c, (*v_inv)(i, k)));
      }
    }
  };
  auto negate = [&](const T& x) { return ring.sub(ring.zero(), x); };
  // Scale row or column i by a unit from the ring's content hook, if any.
  auto tidy_row = [&](std::size_t i) {
    if constexpr (requires { ring.content_unit(std::vector<const T*>{}); }) {
      std::vector<const T*> entries;
      for (std::size_t k = 0; k < n; ++k) entries.push_back(&a(i, k));
      const auto s = ring.content_unit(entries);
      if (!s) return;
      for (std::size_t k = 0; k < n; ++k) a(i, k) = ring.mul(s->first, a(i, k));
      if (u) {
        for (std::size_t k = 0; k < m; ++k) (*u)(i, k) = ring.mul(s->first, (*u)(i, k));
        for (std::size_t k = 0; k < m; ++k) (*u_inv)(k, i) = ring.mul((*u_inv)(k, i), s->second);
      }
    }
  };
  auto tidy_col = [&](std::size_t j) {
    if constexpr (requires { ring.content_unit(std::vector<const T*>{}); }) {
      std::vector<const T*> entries;
      for (std::size_t k = 0; k < m; ++k) entries.push_back(&a(k, j));
      const auto s = ring.content_unit(entries);
      if (!s) return;
      for (std::size_t k = 0; k < m; ++k) a(k, j) = ring.mul(a(k, j), s->first);
      if (v) {
        for (std::size_t k = 0; k < n; ++k) (*v)(k, j) = ring.mul((*v)(k, j), s->first);
        for (std::size_t k = 0; k < n; ++k) (*v_inv)(j, k) = ring.mul(s->second, (*v_inv)(j, k));
      }
    }
  };

  SmithForm<T> result;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Pivot of least norm in the remaining block.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (ring.is_zero(a(i, j))) continue;
        if (!pivot || ring.norm(a(i, j)) < ring.norm(a(pivot->first, pivot->second))) pivot = {i, j};
      }
    }
    if (!pivot) break;
    swap_rows(t, pivot->first);
    swap_cols(t, pivot->second);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (ring.is_zero(a(i, t))) continue;
        auto [q, r] = ring.divmod(a(i, t), a(t, t));
        add_row(i, t, negate(q));
        tidy_row(i);
        if (!ring.is_zero(r)) {
          swap_rows(i, t);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (ring.is_zero(a(t, j))) continue;
        auto [q, r] = ring.divmod(a(t, j), a(t, t));
        add_col(j, t, negate(q));
        tidy_col(j);
        if (!ring.is_zero(r)) {
          swap_cols(j, t);
          changed = true;
        }
      }
      if (changed) continue;
      // Row and column are clear; enforce divisibility of the remaining block.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (ring.is_zero(a(i, j))) continue;
          if (!ring.is_zero(ring.divmod(a(i, j), a(t, t)).second)) {
            bad_row = i;
            break;
          }
        }
      }
      if (!bad_row) break;
      add_row(t, *bad_row, ring.one());
      tidy_row(t);
    }

    auto [unit, unit_inv] = ring.normalizing_unit(a(t, t));
    for (std::size_t k = 0; k < n; ++k) a(t, k) = ring.mul(unit, a(t, k));
    if (u) {
      for (std::size_t k = 0; k < m; ++k) (*u)(t, k) = ring.mul(unit, (*u)(t, k));
      for (std::size_t k = 0; k < m; ++k) (*u_inv)(k, t) = ring.mul((*u_inv)(k, t), unit_inv);
    }
  }
  result.rank = t;
  for (std::size_t i = 0; i < std::min(m, n); ++i) result.diagonal.push_back(a(i, i));
  result.u = std::move(u);
  result.v = std::move(v);
  result.u_inv = std::move(u_inv);
  result.v_inv = std::move(v_inv);
  return result;
}

template <class R>
Matrix<typename R::Element> multiply(const R& ring, const Matrix<typename R::Element>& x,
                                     const Matrix<typename R::Element>& y) {
  if (x.cols() != y.rows()) throw Error(ErrorCode::InvariantBreach, "matrix shape mismatch");
  Matrix<typename R::Element> out(x.rows(), y.cols(), ring.zero());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (ring.is_zero(x(i, k))) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        out(i, j) = ring.add(out(i, j), ring.mul(x(i, k), y(k, j)));
      }
    }
  }
  return out;
}

SmithForm<Integer> integer_snf(const Matrix<Integer>& a, bool with_transforms = false);

namespace detail {

template <Field F>
LaurentPoly<F> tidy(const LaurentRing<F>& ring, LaurentPoly<F> x) {
  if (auto s = ring.content_unit({&x})) return ring.mul(s->first, x);
  return x;
}

template <Field F>
LaurentPoly<F> laurent_gcd(const LaurentRing<F>& ring, LaurentPoly<F> a, LaurentPoly<F> b) {
  while (!b.is_zero()) {
    auto r = tidy(ring, a.divmod(b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.normalized();
}

// Fraction a/b with |a|, b <= sqrt(m/2) and a = u b mod m, if one exists.
inline std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m) {
  const Integer bound = sqrt(Integer(m / 2));
  Integer r0 = m, r1 = u, s0 = 0, s1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (s1 == 0 || abs(s1) > bound || gcd(r1, s1) != 1) return std::nullopt;
  Rational out(r1, s1);
  out.canonicalize();
  return out;
}

}  // namespace detail

template <Field F>
SmithForm<LaurentPoly<F>> laurent_snf_modular(const F& field, const Matrix<LaurentPoly<F>>& a);

namespace detail {

// Coordinates of field elements over Q and their images in F_p. Q(zeta_m) is
// reduced along zeta -> w^k for a primitive m-th root w mod p and every unit
// k mod m, which determines the power-basis coordinates mod p.
template <class F>
struct ModularImages;

template <>
struct ModularImages<RationalField> {
  explicit ModularImages(const RationalField&) {}
  std::size_t coordinates() const { return 1; }
  std::uint64_t conductor() const { return 1; }
  bool prepare(std::uint64_t) { return true; }
  std::size_t embeddings() const { return 1; }
  std::optional<std::uint64_t> image(const Rational& c, std::size_t, const PrimeField& fp) const {
    if (c.get_den() % static_cast<unsigned long>(fp.modulus()) == 0) return std::nullopt;
    return fp.from_rational(c);
  }
  std::vector<std::uint64_t> coordinates_mod_p(const std::vector<std::uint64_t>& values, const PrimeField&) const {
    return values;
  }
  Rational element(const RationalField&, const std::vector<Rational>& coords) const { return coords[0]; }
};

template <>
struct ModularImages<CyclotomicField> {
  explicit ModularImages(const CyclotomicField& f) : m(f.conductor()), n(f.degree()) {}
  std::size_t coordinates() const { return n; }
  std::uint64_t conductor() const { return m; }
  bool prepare(std::uint64_t p) {
    const PrimeField fp(p);
    std::vector<std::uint64_t> prime_factors;
    for (std::uint64_t f = 2, rest = m; rest > 1; ++f) {
      if (rest % f) continue;
      prime_factors.push_back(f);
      while (rest % f == 0) rest /= f;
    }
    for (std::uint64_t x = 2; x < p; ++x) {
      const auto w = fp.pow(x, (p - 1) / m);
      bool primitive = true;
      for (auto f : prime_factors) primitive = primitive && fp.pow(w, m / f) != 1;
      if (!primitive) continue;
      roots.clear();
      for (std::uint64_t k = 1; k <= m; ++k) {
        if (std::gcd(k, m) == 1) roots.push_back(fp.pow(w, k));
      }
      return roots.size() == n;
    }
    return false;
  }
  std::size_t embeddings() const { return n; }
  std::optional<std::uint64_t> image(const CyclotomicElement& c, std::size_t k, const PrimeField& fp) const {
    std::uint64_t value = 0, power = 1;
    for (const auto& q : c.coords) {
      if (q != 0) {
        if (q.get_den() % static_cast<unsigned long>(fp.modulus()) == 0) return std::nullopt;
        value = fp.add(value, fp.mul(fp.from_rational(q), power));
      }
      power = fp.mul(power, roots[k]);
    }
    return value;
  }
  // Solves the Vandermonde system sum_j c_j roots[k]^j = values[k].
  std::vector<std::uint64_t> coordinates_mod_p(const std::vector<std::uint64_t>& values, const PrimeField& fp) const {
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(n + 1));
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t power = 1;
      for (std::size_t j = 0; j < n; ++j, power = fp.mul(power, roots[k])) rows[k][j] = power;
      rows[k][n] = values[k];
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (rows[pivot][col] == 0) ++pivot;
      std::swap(rows[pivot], rows[col]);
      const auto inverse = fp.inv(rows[col][col]);
      for (auto& x : rows[col]) x = fp.mul(x, inverse);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || rows[i][col] == 0) continue;
        const auto factor = rows[i][col];
        for (std::size_t j = col; j <= n; ++j) rows[i][j] = fp.sub(rows[i][j], fp.mul(factor, rows[col][j]));
      }
    }
    std::vector<std::uint64_t> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = rows[j][n];
    return out;
  }
  CyclotomicElement element(const CyclotomicField&, const std::vector<Rational>& coords) const { return {coords}; }

  std::uint64_t m;
  std::size_t n;
  std::vector<std::uint64_t> roots;
};

// Invariant factors of a matrix over F[t, 1/t], F of characteristic 0, with
// rank r and nonzero r x r minor d. Elimination over Q swells coefficients,
// so the factors are found over F_p[t, 1/t] for word-size primes and lifted
// by Chinese remaindering and rational reconstruction. A prime is kept only
// if it preserves the rank and yields the smallest degree pattern seen; the
// lift is accepted once it is stable, forms a divisibility chain and its
// product divides d.
template <Field F>
std::vector<LaurentPoly<F>> lifted_invariant_factors(const F& field, const Matrix<LaurentPoly<F>>& a, std::size_t r,
                                                     const LaurentPoly<F>& d) {
  using P = LaurentPoly<F>;
  using FpPoly = LaurentPoly<PrimeField>;
  ModularImages<F> images(field);
  const std::size_t coords = images.coordinates();
  std::optional<std::vector<int>> pattern;
  std::vector<std::vector<std::vector<Integer>>> residues;  // factor, exponent, coordinate
  Integer modulus = 1;
  std::optional<std::vector<P>> previous;
  std::size_t accepted = 0;
  const std::uint64_t step = 2 * images.conductor() / std::gcd<std::uint64_t>(2, images.conductor());
  std::uint64_t p = (1ULL << 31) - 1;
  p -= (p - 1) % step;
  for (; p > (1ULL << 30); p -= step) {
    if (!is_prime(p) || !images.prepare(p)) continue;
    const PrimeField fp(p);
    bool usable = true;
    std::vector<SmithForm<FpPoly>> forms;
    for (std::size_t k = 0; k < images.embeddings() && usable; ++k) {
      Matrix<FpPoly> image(a.rows(), a.cols(), FpPoly(fp));
      for (std::size_t i = 0; i < a.rows() && usable; ++i) {
        for (std::size_t j = 0; j < a.cols() && usable; ++j) {
          const P& x = a(i, j);
          for (int e = x.low(); !x.is_zero() && e <= x.high() && usable; ++e) {
            const auto c = images.image(x.coefficient(e), k, fp);
            if (!c) usable = false;
            else if (*c != 0) image(i, j) += FpPoly::monomial(fp, *c, e);
          }
        }
      }
      if (!usable) break;
      forms.push_back(laurent_snf_modular(fp, image));
      usable = forms.back().rank == r;
    }
    if (!usable) continue;
    std::vector<int> spans;
    int total = 0;
    for (std::size_t i = 0; i < r; ++i) spans.push_back(total += forms[0].diagonal[i].span());
    for (const auto& form : forms) {
      int sum = 0;
      for (std::size_t i = 0; i < r; ++i) usable = usable && (sum += form.diagonal[i].span()) == spans[i];
    }
    if (!usable) continue;
    if (pattern && spans != *pattern) {
      bool smaller = true;
      for (std::size_t i = 0; i < r; ++i) smaller = smaller && spans[i] <= (*pattern)[i];
      if (!smaller) continue;
      pattern.reset();
    }
    if (!pattern) {
      pattern = spans;
      residues.assign(r, {});
      for (std::size_t i = 0; i < r; ++i) {
        residues[i].assign(forms[0].diagonal[i].span() + 1, std::vector<Integer>(coords, Integer(0)));
      }
      modulus = 1;
      previous.reset();
      accepted = 0;
    }
    // Combine: x = x0 + modulus * ((c - x0) / modulus mod p).
    const Integer pz(static_cast<unsigned long>(p));
    const Integer inverse_modulus(static_cast<unsigned long>(fp.inv(Integer(modulus % pz).get_ui())));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t e = 0; e < residues[i].size(); ++e) {
        std::vector<std::uint64_t> values;
        for (const auto& form : forms) values.push_back(form.diagonal[i].coefficient(static_cast<int>(e)));
        const auto c = images.coordinates_mod_p(values, fp);
        for (std::size_t j = 0; j < coords; ++j) {
          Integer delta = ((Integer(static_cast<unsigned long>(c[j])) - residues[i][e][j]) % pz) * inverse_modulus % pz;
          if (delta < 0) delta += pz;
          residues[i][e][j] += modulus * delta;
        }
      }
    }
    modulus *= pz;
    if (++accepted > 400) break;

    std::vector<P> lifted;
    for (std::size_t i = 0; i < r && lifted.size() == i; ++i) {
      P f(field);
      bool ok = true;
      for (std::size_t e = 0; e < residues[i].size() && ok; ++e) {
        std::vector<Rational> rationals;
        for (std::size_t j = 0; j < coords && ok; ++j) {
          auto c = rational_reconstruction(residues[i][e][j], modulus);
          if (c) rationals.push_back(*c);
          else ok = false;
        }
        if (ok) f += P::monomial(field, images.element(field, rationals), static_cast<int>(e));
      }
      if (ok) lifted.push_back(std::move(f));
    }
    if (lifted.size() != r) {
      previous.reset();
      continue;
    }
    if (previous && *previous == lifted) {
      bool chain = true;
      for (std::size_t i = 0; i + 1 < r && chain; ++i) chain = lifted[i + 1].divmod(lifted[i]).second.is_zero();
      P product = P::constant(field, 1);
      for (const auto& f : lifted) product *= f;
      if (chain && d.divmod(product).second.is_zero()) return lifted;
    }
    previous = std::move(lifted);
  }
  throw Error(ErrorCode::InvariantBreach, "modular invariant factors did not stabilize");
}

}  // namespace detail

// Invariant factors without transforms. Fraction-free elimination gives the
// rank r and a nonzero r x r minor D; every invariant factor divides D, so
// the elimination runs on [A | D I] with all entries reduced modulo D.
template <Field F>
SmithForm<LaurentPoly<F>> laurent_snf_modular(const F& field, const Matrix<LaurentPoly<F>>& a) {
  using P = LaurentPoly<F>;
  const LaurentRing<F> ring{field};
  const std::size_t m = a.rows(), n = a.cols(), k = std::min(m, n);
  SmithForm<P> out;
  out.diagonal.assign(k, ring.zero());

  auto min_norm_entry = [&](const Matrix<P>& b, std::size_t from) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = from; i < m; ++i) {
      for (std::size_t j = from; j < n; ++j) {
        if (b(i, j).is_zero()) continue;
        if (!best || b(i, j).span() < b(best->first, best->second).span()) best = {i, j};
      }
    }
    return best;
  };
  auto swap_lines = [&](Matrix<P>& b, std::size_t t, std::pair<std::size_t, std::size_t> at) {
    if (at.first != t) {
      for (std::size_t j = 0; j < n; ++j) std::swap(b(t, j), b(at.first, j));
    }
    if (at.second != t) {
      for (std::size_t i = 0; i < m; ++i) std::swap(b(i, t), b(i, at.second));
    }
  };

  // Bareiss elimination with full pivoting: every entry stays a minor.
  Matrix<P> b = a;
  P previous = ring.one();
  std::size_t r = 0;
  for (; r < k; ++r) {
    const auto at = min_norm_entry(b, r);
    if (!at) break;
    swap_lines(b, r, *at);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = r + 1; j < n; ++j) {
        const P numerator = b(r, r) * b(i, j) - b(i, r) * b(r, j);
        auto [q, rem] = numerator.divmod(previous);
        if (!rem.is_zero()) throw Error(ErrorCode::InvariantBreach, "inexact fraction-free division");
        b(i, j) = std::move(q);
      }
      b(i, r) = ring.zero();
    }
    previous = b(r, r);
  }
  out.rank = r;
  if (r == 0) return out;
  const P d = detail::tidy(ring, previous);
  if constexpr (std::is_same_v<F, RationalField> || std::is_same_v<F, CyclotomicField>) {
    auto factors = detail::lifted_invariant_factors(field, a, r, d);
    for (std::size_t i = 0; i < r; ++i) out.diagonal[i] = std::move(factors[i]);
    return out;
  }

  auto reduce = [&](const P& x) { return x.is_zero() ? x : x.divmod(d).second; };
  Matrix<P> c(m, n, ring.zero());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(i, j) = reduce(a(i, j));
  }
  auto tidy_row = [&](std::size_t i) {
    std::vector<const P*> entries;
    for (std::size_t j = 0; j < n; ++j) entries.push_back(&c(i, j));
    if (auto s = ring.content_unit(entries)) {
      for (std::size_t j = 0; j < n; ++j) c(i, j) = ring.mul(s->first, c(i, j));
    }
  };
  auto tidy_col = [&](std::size_t j) {
    std::vector<const P*> entries;
    for (std::size_t i = 0; i < m; ++i) entries.push_back(&c(i, j));
    if (auto s = ring.content_unit(entries)) {
      for (std::size_t i = 0; i < m; ++i) c(i, j) = ring.mul(s->first, c(i, j));
    }
  };

  std::vector<P> diagonal;
  std::size_t t = 0;
  for (; t < k; ++t) {
    const auto at = min_norm_entry(c, t);
    if (!at) break;
    swap_lines(c, t, *at);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (c(i, t).is_zero()) continue;
        const P q = c(i, t).divmod(c(t, t)).first;
        for (std::size_t j = t; j < n; ++j) {
          if (!c(t, j).is_zero()) c(i, j) = reduce(c(i, j) - q * c(t, j));
        }
        tidy_row(i);
        if (!c(i, t).is_zero()) {
          for (std::size_t j = 0; j < n; ++j) std::swap(c(t, j), c(i, j));
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (c(t, j).is_zero()) continue;
        const P q = c(t, j).divmod(c(t, t)).first;
        for (std::size_t i = t; i < m; ++i) {
          if (!c(i, t).is_zero()) c(i, j) = reduce(c(i, j) - q * c(i, t));
        }
        tidy_col(j);
        if (!c(t, j).is_zero()) {
          for (std::size_t i = 0; i < m; ++i) std::swap(c(i, t), c(i, j));
          changed = true;
        }
      }
    }
    diagonal.push_back(detail::laurent_gcd(ring, c(t, t), d));
  }
  for (std::size_t i = t; i < m; ++i) diagonal.push_back(d.normalized());

  // Diagonal to divisibility chain: (x, y) -> (gcd, lcm).
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      const P g = detail::laurent_gcd(ring, diagonal[i], diagonal[j]);
      const P l = (diagonal[i] * diagonal[j]).divmod(g).first.normalized();
      diagonal[i] = g;
      diagonal[j] = l;
    }
  }
  for (std::size_t i = 0; i < r; ++i) out.diagonal[i] = diagonal[i];
  return out;
}

template <Field F>
SmithForm<LaurentPoly<F>> laurent_snf(const F& field, const Matrix<LaurentPoly<F>>& a,
                                      bool with_transforms = false) {
  if (!with_transforms) return laurent_snf_modular(field, a);
  return smith_normal_form(LaurentRing<F>{field}, a, with_transforms);
}

}  // namespace artin
