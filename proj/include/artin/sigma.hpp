#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "artin/chain.hpp"
#include "artin/character.hpp"
#include "artin/graph.hpp"

namespace artin {

enum class Verdict { Yes, No, ConjecturalNo, Unknown };

std::string_view to_string(Verdict v);

// The result a verdict rests on.
enum class Provenance {
  None,
  LivingConnectedDominant,   // Liv connected and dominant implies Sigma^1
  LivingNecessity,           // Liv_0 disconnected or Liv not dominant excludes Sigma^1
  UniformPrime,              // one prime divides every l(e)/2: explicit quotient witness
  BalancedColouring,         // balanced colouring of the dead-edge graph: explicit witness
  QuotientWitness,           // searched finite abelian quotient and character
  KernelHomology,            // infinite-dimensional homology of the kernel
  SigmaOneConjecture,        // no certificate; the Sigma^1 conjecture predicts No
  LinkCriterion,             // edge, spherical-link and complex conditions hold
  TwoDimensional,            // characterization for 2-dimensional groups
  Coherent,                  // characterization for coherent groups
  EdgeNecessity,             // failing edge condition excludes Sigma^2
  LinkNecessity,             // disconnected spherical link excludes Sigma^2
  SigmaOneFailure,           // Sigma^2 is contained in Sigma^1
  SigmaTwoConjecture,        // no certificate; the Sigma^2 conjecture predicts No
};

std::string_view to_string(Provenance p);

// Partition of the even core's edges into colours, each with a prime
// dividing l(e)/2 of all its edges, such that every even simple cycle meets
// each colour zero or two times.
struct BalancedColouring {
  LabeledMultigraph core;
  std::vector<std::size_t> colour;     // per core edge
  std::vector<unsigned long> primes;   // per colour
  std::vector<int> parity;             // per core edge, +-1
  bool exact = true;                   // false when only a cycle basis was checked
};

struct GroupFlags {
  bool two_dimensional = false;   // no spherical triangle
  bool coherent = false;
  bool balanced = false;
  bool even = false;              // all labels even
  bool raag = false;              // all labels 2
  bool spherical = false;         // the whole graph is a spherical clique
  bool odd_tree = false;          // a tree with odd labels only
  bool fc_type = false;           // every clique spherical
  bool kpi1_known = false;        // 2-dimensional or FC type
  // Smallest prime dividing l(e)/2 for every even l(e) > 2 (2 when there is no such edge).
  std::optional<unsigned long> uniform_prime;
  std::optional<BalancedColouring> colouring;
  // Obstructions to coherence, when not coherent.
  std::vector<Vertex> chordless_cycle;
  std::vector<Vertex> heavy_clique;   // 3- or 4-clique with two labels > 2
  std::vector<Vertex> forbidden_diamond;
};

GroupFlags classify_group(const LabeledGraph& g);

std::optional<BalancedColouring> balanced_structure(const LabeledGraph& g);

// Quotient phi, character mu and cut certifying that chi is not in Sigma^1.
struct Witness {
  Cut cut;
  FiniteQuotient quotient;
  GroupElement character;
  std::vector<GroupRingElement> obstruction;
};

struct WitnessBound {
  std::size_t max_factors = 3;
  std::size_t max_order = 125;
};

std::optional<Witness> witness_search(const LabeledGraph& g, const Character& chi, WitnessBound bound = {});

struct LivingCertificate {
  bool liv_connected;
  bool liv0_connected;
  bool dominant;
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> undominated;
};

struct WitnessCertificate {
  Witness witness;
  bool phi_restricted_surjective;
  std::size_t twisted_h1_free_rank;
};

struct HomologyCertificate {
  std::string field;
  std::optional<GroupElement> character;
  std::size_t degree;
  std::size_t free_rank;
};

struct Sigma2Conditions {
  std::vector<Edge> edge_failures;     // condition on dead and doubly-dead edges
  std::vector<Vertex> link_failures;   // dead vertices with empty or disconnected link
  bool complex_connected = false;
  bool complex_h1_vanishes = false;
  std::optional<bool> simply_connected;  // unset when the Tietze search gives up
  std::size_t complex_triangles = 0;

  bool homological() const {
    return edge_failures.empty() && link_failures.empty() && complex_connected && complex_h1_vanishes;
  }
  std::optional<bool> homotopical() const {
    if (!homological()) return false;
    return simply_connected;
  }
};

struct TwoDimensionalConditions {
  std::vector<Edge> bad_edges;          // both ends dead, or dead edge
  std::vector<Vertex> bad_dead_vertices;  // dead vertices without exactly one living neighbour
  bool liv_tree;
};

using Certificate = std::variant<std::monostate, LivingCertificate, WitnessCertificate, HomologyCertificate,
                                 Sigma2Conditions, TwoDimensionalConditions>;

struct Decision {
  Verdict verdict = Verdict::Unknown;
  Provenance provenance = Provenance::None;
  bool conditional_on_kpi1 = false;
  bool kpi1_assumed = false;
  std::string summary;
  Certificate certificate;
};

struct Sigma2Decision {
  Decision homotopical;   // Sigma^2(A)
  Decision homological;   // Sigma^2(A, Z)
  // Sigma^n agrees with Sigma^2 for all n >= 2.
  bool stable = false;
};

struct DecideOptions {
  std::vector<FieldSpec> fields;   // empty: default menu
  bool assume_kpi1 = false;
  WitnessBound bound;
  std::size_t tietze_passes = 1000;
};

Decision sigma1_decide(const LabeledGraph& g, const Character& chi, const DecideOptions& options = {});

Sigma2Conditions sigma2_sufficient(const LabeledGraph& g, const Character& chi, std::size_t tietze_passes = 1000);

Sigma2Decision sigma2_decide(const LabeledGraph& g, const Character& chi, const DecideOptions& options = {});

// Semi-decision of triviality of the group with the given generators and
// relators (letters +-(i+1)). Unset when undecided.
std::optional<bool> tietze_trivial(std::size_t generators, std::vector<std::vector<int>> relators,
                                   std::size_t max_passes);

struct FibringReport {
  Verdict finitely_generated;    // kernel of chi
  Verdict finitely_presented;
  Verdict fp2;
  bool all_finiteness = false;   // F_infinity when finitely presented
  bool conditional_on_kpi1 = false;
  std::string summary;
  // Whether the derived subgroup is finitely presented, for 2-dimensional groups.
  std::optional<bool> derived_finitely_presented;
};

FibringReport fibring_report(const LabeledGraph& g, const Character& chi, const DecideOptions& options = {});

struct ScanEntry {
  std::vector<long> chi;
  Decision sigma1;
  Sigma2Decision sigma2;
};

// Every class with primitive integer values in [-bound, bound], constant on odd classes.
std::vector<std::vector<long>> enumerate_characters(const LabeledGraph& g, long bound);

std::vector<ScanEntry> scan(const LabeledGraph& g, long bound, const DecideOptions& options = {});

}  // namespace artin
