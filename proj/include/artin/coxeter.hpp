#pragma once

#include <functional>
#include <string>
#include <vector>

#include "artin/fields.hpp"
#include "artin/graph.hpp"
#include "artin/laurent.hpp"

namespace artin {

// Irreducible factor of a spherical Coxeter group.
struct CoxeterFactor {
  std::string name;               // e.g. "A3", "B3", "I2(5)"
  std::vector<Vertex> vertices;   // vertices of the Dynkin component
  Integer order;
};

struct CoxeterType {
  bool spherical = false;
  std::vector<CoxeterFactor> factors;  // empty unless spherical
  Integer order = 0;                   // 0 unless spherical

  // Factor names joined with " x ", or "non-spherical".
  std::string description() const;
};

// Coxeter type of W_X for the vertex set X of g. A non-adjacent pair makes
// X non-spherical.
CoxeterType classify(const LabeledGraph& g, const std::vector<Vertex>& subset);

bool is_spherical(const LabeledGraph& g, const std::vector<Vertex>& subset);

// Signed sum of words, sum over w of (-1)^{l(w)} w.
struct SignedWord {
  std::vector<Vertex> word;  // a reduced expression
  int sign;
};
using SignedWordSum = std::vector<SignedWord>;

// Largest clique rank handled by explicit enumeration.
inline constexpr std::size_t kMaxCellRank = 3;

// Minimal-length representatives of W_X / W_{X_v} with their signs, where
// X_v = X minus v. X must be spherical of size at most kMaxCellRank.
// Ordered by length, then by the order in which breadth-first search
// (generators in vertex order) reaches them.
SignedWordSum minimal_coset_representatives(const LabeledGraph& g, const std::vector<Vertex>& x, Vertex v);

// T(w) = (-1)^{l(w)} t^{chi(w)} times the product of `letter` over the
// letters of w, summed over the word sum.
template <Field F>
LaurentPoly<F> evaluate_word_sum(const F& field, const SignedWordSum& sum, const std::vector<long>& chi,
                                 const std::function<typename F::Element(Vertex)>& letter = {}) {
  LaurentPoly<F> total(field);
  for (const auto& term : sum) {
    long exponent = 0;
    auto coefficient = field.from_int(term.sign);
    for (Vertex a : term.word) {
      exponent += chi.at(a);
      if (letter) coefficient = field.mul(coefficient, letter(a));
    }
    total += LaurentPoly<F>::monomial(field, coefficient, static_cast<int>(exponent));
  }
  return total;
}

}  // namespace artin
