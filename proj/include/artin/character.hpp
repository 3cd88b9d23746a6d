#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "artin/fields.hpp"
#include "artin/graph.hpp"

namespace artin {

// Homomorphism A_Gamma -> R, given by its rational values on the vertices.
struct Character {
  std::vector<Rational> values;

  const Rational& operator[](Vertex v) const { return values.at(v); }
  bool is_zero() const;
  bool is_discrete() const;  // all values integral
  Character negated() const;
  // Positive multiple with coprime integer values. Same class in the sphere.
  std::vector<long> primitive() const;
  std::string to_string(const LabeledGraph& g) const;

  bool operator==(const Character&) const = default;
};

Character make_character(const std::vector<long>& values);

// Throws ZeroCharacter or OddEdgeMismatch.
void validate_character(const LabeledGraph& g, const Character& chi);

// Edge e = {end, middle} with label 4 lying in a B3 triangle {end, middle, third}
// (middle -3- third, end -2- third) with chi(end) + 2 chi(middle) = 0.
struct ThreeDeadEdge {
  Edge edge;
  Vertex end;
  Vertex middle;
  Vertex third;
};

struct LivingSubgraph {
  std::vector<Vertex> living;         // chi != 0
  std::vector<Vertex> dead;           // chi == 0
  std::vector<Edge> dead_edges;       // even label >= 4, living ends, chi(u) + chi(v) = 0
  std::vector<Edge> living_edges;     // edges of Liv
  std::vector<ThreeDeadEdge> three_dead;
  std::vector<std::vector<Vertex>> components;  // of Liv
  bool liv_connected = false;
  bool liv0_connected = false;  // full subgraph on living vertices
  bool dominant = false;        // every dead vertex has a living neighbour
  std::vector<Vertex> undominated;

  bool is_living(Vertex v) const;
  bool is_dead_edge(Vertex u, Vertex v) const;
  bool is_three_dead(Vertex u, Vertex v) const;
};

LivingSubgraph living_analysis(const LabeledGraph& g, const Character& chi);

// Spherical link of v in Liv: cells are cliques X of the graph among the
// living neighbours of v (dead edges included) with X and X + v spherical. A cell of size k has dimension k-1.
struct SphericalLink {
  Vertex centre;
  std::vector<Vertex> vertices;
  std::vector<std::vector<Vertex>> cells;

  bool empty() const { return vertices.empty(); }
  bool connected() const;
};

SphericalLink spherical_link(const LabeledGraph& g, const Character& chi, Vertex v);

// Moves producing an epimorphism A_Gamma -> A_Gamma' through which chi factors.
struct DeleteDeadVertex {
  Vertex v;
};
struct AddEvenEdge {
  Vertex u, v;
  Label label;
};
struct AddEqualEdge {
  Vertex u, v;
  Label label;
};
struct ReduceLabel {
  Vertex u, v;
  Label divisor;
};
struct IdentifyVertices {
  Vertex u, v;
};
using Move = std::variant<DeleteDeadVertex, AddEvenEdge, AddEqualEdge, ReduceLabel, IdentifyVertices>;

struct Reduction {
  LabeledGraph graph;
  Character chi;
  std::string description;
};

Reduction reduce(const LabeledGraph& g, const Character& chi, const Move& move);

// Finite abelian quotient phi: A_Gamma -> C_{m_1} x ... x C_{m_r}.
struct FiniteQuotient {
  std::vector<unsigned> orders;
  std::vector<std::vector<unsigned>> phi;  // phi[v] residues, one per factor

  bool operator==(const FiniteQuotient&) const = default;
};

struct QuotientCheck {
  bool psi_surjective;               // (chi, phi) onto Z x G
  bool phi_restricted_surjective;    // phi restricted to ker chi onto G
};

// Throws BadResidue, OddEdgeMismatch or NonDiscreteCharacter.
QuotientCheck validate_quotient(const LabeledGraph& g, const Character& chi, const FiniteQuotient& q);

}  // namespace artin
