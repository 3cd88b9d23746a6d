#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "artin/character.hpp"
#include "artin/coxeter.hpp"
#include "artin/group_ring.hpp"
#include "artin/laurent.hpp"
#include "artin/smith.hpp"

namespace artin {

// Cells of the Salvetti complex up to degree 3: the empty set, vertices,
// edges and spherical triangles. A degree-k cell is a k-clique.
struct SalvettiCells {
  struct Face {
    std::size_t index;  // face cell in degree k-1
    int sign;           // (-1)^position of the removed vertex
    SignedWordSum representatives;
  };

  std::array<std::vector<std::vector<Vertex>>, 4> cells;
  // faces[k][j]: faces of cell j of degree k (k >= 1)
  std::array<std::vector<std::vector<Face>>, 4> faces;

  std::size_t count(std::size_t degree) const { return cells.at(degree).size(); }
};

SalvettiCells salvetti_cells(const LabeledGraph& g);

template <Field F>
struct ChainComplex {
  F field;
  std::array<std::size_t, 4> ranks{};
  // boundary[k] is the matrix of C_k -> C_{k-1} for k = 1..3 (index 0 empty).
  std::vector<Matrix<LaurentPoly<F>>> boundary;
};

// Boundary of sigma_X = sum over v in X of (-1)^pos(v) T(W_X / W_{X-v}) sigma_{X-v},
// with each letter a contributing t^{chi(a)} times `letter(a)`.
template <Field F>
ChainComplex<F> build_salvetti_complex(const SalvettiCells& cells, const std::vector<long>& chi, const F& field,
                                       const std::function<typename F::Element(Vertex)>& letter = {}) {
  using Poly = LaurentPoly<F>;
  ChainComplex<F> out{field, {}, {}};
  for (std::size_t k = 0; k < 4; ++k) out.ranks[k] = cells.count(k);
  out.boundary.emplace_back(0, 0, Poly(field));
  for (std::size_t k = 1; k < 4; ++k) {
    Matrix<Poly> d(out.ranks[k - 1], out.ranks[k], Poly(field));
    for (std::size_t j = 0; j < out.ranks[k]; ++j) {
      for (const auto& face : cells.faces[k][j]) {
        auto entry = evaluate_word_sum(field, face.representatives, chi, letter);
        d(face.index, j) = face.sign > 0 ? entry : -entry;
      }
    }
    out.boundary.push_back(std::move(d));
  }
  return out;
}

// True when every composite of consecutive boundary maps vanishes.
template <Field F>
bool boundary_check(const ChainComplex<F>& c) {
  LaurentRing<F> ring{c.field};
  for (std::size_t k = 2; k < c.boundary.size(); ++k) {
    const auto& lower = c.boundary[k - 1];
    const auto& upper = c.boundary[k];
    if (lower.rows() == 0 || upper.cols() == 0 || lower.cols() == 0) continue;
    auto product = multiply(ring, lower, upper);
    for (std::size_t i = 0; i < product.rows(); ++i) {
      for (std::size_t j = 0; j < product.cols(); ++j) {
        if (!product(i, j).is_zero()) return false;
      }
    }
  }
  return true;
}

struct TorsionFactor {
  std::string polynomial;  // monic, lowest exponent 0
  int degree;

  bool operator==(const TorsionFactor&) const = default;
};

// H_n(C) as an F[t^+-1]-module: free part plus torsion invariant factors.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<TorsionFactor> torsion;

  bool finite_dimensional() const { return free_rank == 0; }
  // F-dimension when finite dimensional.
  std::size_t dimension() const;
};

template <Field F>
std::vector<HomologyGroup> homology(const ChainComplex<F>& c, std::size_t max_degree = 2) {
  std::array<std::size_t, 5> rank{};
  std::array<std::vector<TorsionFactor>, 5> torsion;
  for (std::size_t k = 1; k < c.boundary.size() && k <= max_degree + 1; ++k) {
    const auto& d = c.boundary[k];
    if (d.rows() == 0 || d.cols() == 0) continue;
    auto snf = laurent_snf(c.field, d);
    rank[k] = snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i) {
      const auto& f = snf.diagonal[i];
      if (!f.is_unit()) torsion[k].push_back({f.to_string(), f.span()});
    }
  }
  std::vector<HomologyGroup> out;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    HomologyGroup h;
    h.free_rank = c.ranks[n] - rank[n] - rank[n + 1];
    h.torsion = torsion[n + 1];
    out.push_back(std::move(h));
  }
  return out;
}

// Coefficient field for plain homology: Q (characteristic 0) or F_p.
struct FieldSpec {
  unsigned long characteristic = 0;

  std::string name() const;
  bool operator==(const FieldSpec&) const = default;
};

FieldSpec parse_field(const std::string& text);

// Q together with F_p for every prime p dividing some edge label.
std::vector<FieldSpec> default_field_menu(const LabeledGraph& g);

// Twisted coefficients: each letter a also contributes mu(phi(a)) in Q(zeta_M).
struct Twist {
  FiniteQuotient quotient;
  // Characters of G to use; all of them when empty.
  std::vector<GroupElement> characters;
};

struct FieldHomology {
  std::string field;
  std::optional<GroupElement> character;  // set for twisted coefficients
  std::vector<HomologyGroup> groups;      // degrees 0, 1, 2
};

struct KernelHomologyReport {
  std::vector<long> chi;  // primitive representative used
  std::vector<FieldHomology> entries;

  // First entry with infinite-dimensional H_n, if any.
  const FieldHomology* infinite_in_degree(std::size_t n) const;
};

KernelHomologyReport kernel_homology_report(const LabeledGraph& g, const Character& chi,
                                            const std::vector<FieldSpec>& fields);
KernelHomologyReport kernel_homology_report(const LabeledGraph& g, const Character& chi, const Twist& twist);
KernelHomologyReport kernel_homology_report(const LabeledGraph& g, const SalvettiCells& cells,
                                            const Character& chi, const std::vector<FieldSpec>& fields);
KernelHomologyReport kernel_homology_report(const LabeledGraph& g, const SalvettiCells& cells,
                                            const Character& chi, const Twist& twist);

// Split of the living vertices into two unions of Liv components.
struct Cut {
  std::vector<Vertex> side_one;
  std::vector<Vertex> side_two;
};

// Checks that no living edge crosses the cut and both sides are nonempty.
// Returns the dead edges joining the two sides.
std::vector<Edge> validate_cut(const LabeledGraph& g, const Character& chi, const Cut& cut);

// For each dead edge {u, v} with label 2k across the cut, the element
// sum_{j<k} (phi(u) + phi(v))^j of Q[G].
std::vector<GroupRingElement> normalized_h1_obstruction(const LabeledGraph& g, const Character& chi,
                                                        const Cut& cut, const FiniteQuotient& q);

}  // namespace artin
