#include "artin/sigma.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "artin/number_theory.hpp"
#include "artin/smith.hpp"
#include "detail/witness.hpp"

namespace artin {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::ConjecturalNo: return "ConjecturalNo";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::None: return "none";
    case Provenance::LivingConnectedDominant: return "living-connected-dominant";
    case Provenance::LivingNecessity: return "living-zero-necessity";
    case Provenance::UniformPrime: return "uniform-prime";
    case Provenance::BalancedColouring: return "balanced-colouring";
    case Provenance::QuotientWitness: return "finite-quotient-witness";
    case Provenance::KernelHomology: return "kernel-homology";
    case Provenance::SigmaOneConjecture: return "sigma1-conjecture";
    case Provenance::LinkCriterion: return "spherical-link-criterion";
    case Provenance::TwoDimensional: return "two-dimensional-characterization";
    case Provenance::Coherent: return "coherent-characterization";
    case Provenance::EdgeNecessity: return "edge-condition-necessity";
    case Provenance::LinkNecessity: return "link-condition-necessity";
    case Provenance::SigmaOneFailure: return "sigma1-failure";
    case Provenance::SigmaTwoConjecture: return "sigma2-conjecture";
  }
  return "none";
}

namespace {

LivingCertificate living_certificate(const LivingSubgraph& liv) {
  return {liv.liv_connected, liv.liv0_connected, liv.dominant, liv.components, liv.undominated};
}

Decision verdict(Verdict v, Provenance p, std::string summary, Certificate cert = {}) {
  Decision d;
  d.verdict = v;
  d.provenance = p;
  d.summary = std::move(summary);
  d.certificate = std::move(cert);
  return d;
}

// Marks a decision as resting on the K(pi,1) conjecture unless it is known.
void mark_kpi1(Decision& d, const GroupFlags& flags, const DecideOptions& options) {
  if (flags.kpi1_known) return;
  if (options.assume_kpi1) d.kpi1_assumed = true;
  else d.conditional_on_kpi1 = true;
}

std::vector<FieldSpec> field_menu(const LabeledGraph& g, const DecideOptions& options) {
  return options.fields.empty() ? default_field_menu(g) : options.fields;
}

WitnessCertificate certify(const LabeledGraph& g, const SalvettiCells& cells, const Character& chi, Witness w) {
  const auto check = validate_quotient(g, chi, w.quotient);
  const auto report = kernel_homology_report(g, cells, chi, Twist{w.quotient, {w.character}});
  const std::size_t rank = report.entries.front().groups.at(1).free_rank;
  if (rank == 0) {
    throw Error(ErrorCode::InvariantBreach, "quotient witness kills the obstruction but twisted H_1 is finite");
  }
  return {std::move(w), check.phi_restricted_surjective, rank};
}

std::string conditional_suffix(const Decision& d) {
  if (d.conditional_on_kpi1) return " (conditional on the K(pi,1) conjecture)";
  if (d.kpi1_assumed) return " (K(pi,1) conjecture assumed)";
  return "";
}

}  // namespace

Decision sigma1_decide(const LabeledGraph& g, const Character& chi, const DecideOptions& options) {
  validate_character(g, chi);
  const auto liv = living_analysis(g, chi);
  if (liv.liv_connected && liv.dominant) {
    return verdict(Verdict::Yes, Provenance::LivingConnectedDominant, "Liv is connected and dominant",
                   living_certificate(liv));
  }
  if (!liv.liv0_connected || !liv.dominant) {
    return verdict(Verdict::No, Provenance::LivingNecessity,
                   !liv.dominant ? "Liv is not dominant" : "the full subgraph on living vertices is disconnected",
                   living_certificate(liv));
  }
  const auto cells = salvetti_cells(g);
  const auto cut = detail::default_cut(liv);
  const auto flags = classify_group(g);
  if (flags.colouring) {
    try {
      auto w = detail::balanced_witness(g, chi, cut, *flags.colouring);
      return verdict(Verdict::No, Provenance::BalancedColouring,
                     "balanced colouring gives a finite quotient killing every dead edge across the cut",
                     certify(g, cells, chi, std::move(w)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ColouringInvalidOnCut) throw;
    }
  }
  if (flags.uniform_prime) {
    auto w = detail::uniform_prime_witness(g, chi, cut, *flags.uniform_prime);
    return verdict(Verdict::No, Provenance::UniformPrime,
                   "C_" + std::to_string(*flags.uniform_prime) + " quotient kills every dead edge across the cut",
                   certify(g, cells, chi, std::move(w)));
  }
  if (auto w = witness_search(g, chi, options.bound)) {
    return verdict(Verdict::No, Provenance::QuotientWitness, "searched finite quotient kills every dead edge across a cut",
                   certify(g, cells, chi, std::move(*w)));
  }
  const auto report = kernel_homology_report(g, cells, chi, field_menu(g, options));
  if (const auto* entry = report.infinite_in_degree(1)) {
    return verdict(Verdict::No, Provenance::KernelHomology, "H_1 of the kernel is infinite dimensional over " + entry->field,
                   HomologyCertificate{entry->field, entry->character, 1, entry->groups[1].free_rank});
  }
  return verdict(Verdict::ConjecturalNo, Provenance::SigmaOneConjecture,
                 "Liv is disconnected; no certificate found", living_certificate(liv));
}

std::optional<bool> tietze_trivial(std::size_t generators, std::vector<std::vector<int>> relators,
                                   std::size_t max_passes) {
  constexpr std::size_t kMaxLength = 4096;
  std::vector<bool> alive(generators, true);
  auto reduce = [](std::vector<int>& w) {
    std::vector<int> out;
    for (int x : w) {
      if (!out.empty() && out.back() == -x) out.pop_back();
      else out.push_back(x);
    }
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
      ++lo;
      --hi;
    }
    w.assign(out.begin() + static_cast<long>(lo), out.begin() + static_cast<long>(hi));
  };
  for (std::size_t pass = 0; pass <= max_passes; ++pass) {
    for (auto& r : relators) reduce(r);
    relators.erase(std::remove_if(relators.begin(), relators.end(), [](const auto& r) { return r.empty(); }),
                   relators.end());
    std::vector<std::size_t> occurrences(generators, 0);
    for (const auto& r : relators) {
      for (int x : r) ++occurrences[static_cast<std::size_t>(std::abs(x) - 1)];
    }
    std::size_t remaining = 0;
    for (std::size_t i = 0; i < generators; ++i) {
      if (!alive[i]) continue;
      ++remaining;
      // A generator in no relator survives as a free factor.
      if (occurrences[i] == 0) return false;
    }
    if (remaining == 0) return true;
    if (pass == max_passes) return std::nullopt;
    // Eliminate a generator occurring exactly once in the shortest possible relator.
    std::optional<std::pair<std::size_t, std::size_t>> choice;  // relator, position
    for (std::size_t r = 0; r < relators.size(); ++r) {
      if (choice && relators[r].size() >= relators[choice->first].size()) continue;
      std::map<int, std::size_t> count;
      for (int x : relators[r]) ++count[std::abs(x)];
      for (std::size_t pos = 0; pos < relators[r].size(); ++pos) {
        if (count[std::abs(relators[r][pos])] == 1) {
          choice = {r, pos};
          break;
        }
      }
    }
    if (!choice) return std::nullopt;
    const auto [ri, pos] = *choice;
    const auto rel = relators[ri];
    const int letter = rel[pos];
    // rel = u x^e v  gives  x^e = u^-1 v^-1.
    std::vector<int> value;
    for (std::size_t i = pos; i-- > 0;) value.push_back(-rel[i]);
    for (std::size_t i = rel.size(); i-- > pos + 1;) value.push_back(-rel[i]);
    std::vector<int> inverse;
    for (auto it = value.rbegin(); it != value.rend(); ++it) inverse.push_back(-*it);
    relators.erase(relators.begin() + static_cast<long>(ri));
    for (auto& r : relators) {
      std::vector<int> out;
      for (int x : r) {
        if (x == letter) out.insert(out.end(), value.begin(), value.end());
        else if (x == -letter) out.insert(out.end(), inverse.begin(), inverse.end());
        else out.push_back(x);
      }
      if (out.size() > kMaxLength) return std::nullopt;
      r = std::move(out);
    }
    alive[static_cast<std::size_t>(std::abs(letter) - 1)] = false;
  }
  return std::nullopt;
}

Sigma2Conditions sigma2_sufficient(const LabeledGraph& g, const Character& chi, std::size_t tietze_passes) {
  validate_character(g, chi);
  const auto liv = living_analysis(g, chi);
  Sigma2Conditions out;
  const std::size_t n = g.vertex_count();

  for (const auto& e : g.edges()) {
    const bool both_dead = !liv.is_living(e.u) && !liv.is_living(e.v);
    if (!both_dead && !liv.is_dead_edge(e.u, e.v)) continue;
    bool found = false;
    for (Vertex u = 0; u < n && !found; ++u) {
      if (u == e.u || u == e.v || !liv.is_living(u)) continue;
      found = g.adjacent(u, e.u) && g.adjacent(u, e.v) && is_spherical(g, {e.u, e.v, u});
    }
    if (!found) out.edge_failures.push_back(e);
  }
  for (Vertex v : liv.dead) {
    if (!spherical_link(g, chi, v).connected()) out.link_failures.push_back(v);
  }

  // Complex: Liv with 2-cells on its spherical triangles, minus B3 triangles with a 3-dead edge.
  const auto& verts = liv.living;
  const auto& edges = liv.living_edges;
  std::map<std::pair<Vertex, Vertex>, std::size_t> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_index[{edges[i].u, edges[i].v}] = i;
  auto vertex_index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<std::array<Vertex, 3>> triangles;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!edge_index.count({verts[i], verts[j]})) continue;
      for (std::size_t k = j + 1; k < verts.size(); ++k) {
        const Vertex a = verts[i], b = verts[j], c = verts[k];
        if (!edge_index.count({a, c}) || !edge_index.count({b, c})) continue;
        if (!is_spherical(g, {a, b, c})) continue;
        if (liv.is_three_dead(a, b) || liv.is_three_dead(a, c) || liv.is_three_dead(b, c)) continue;
        triangles.push_back({a, b, c});
      }
    }
  }
  out.complex_triangles = triangles.size();
  Matrix<Integer> d1(verts.size(), edges.size(), Integer(0));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    d1(vertex_index(edges[i].u), i) = -1;
    d1(vertex_index(edges[i].v), i) = 1;
  }
  Matrix<Integer> d2(edges.size(), triangles.size(), Integer(0));
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto [a, b, c] = triangles[t];
    d2(edge_index[{b, c}], t) = 1;
    d2(edge_index[{a, c}], t) = -1;
    d2(edge_index[{a, b}], t) = 1;
  }
  const std::size_t r1 = edges.empty() ? 0 : integer_snf(d1).rank;
  out.complex_connected = !verts.empty() && verts.size() - r1 == 1;
  bool acyclic = false;
  if (triangles.empty() || edges.empty()) {
    acyclic = edges.size() == r1;
  } else {
    const auto snf = integer_snf(d2);
    acyclic = edges.size() - r1 == snf.rank &&
              std::all_of(snf.diagonal.begin(), snf.diagonal.begin() + static_cast<long>(snf.rank),
                          [](const Integer& x) { return abs(x) == 1; });
  }
  out.complex_h1_vanishes = acyclic;

  if (out.complex_connected) {
    // Edge-path presentation: generators are the edges outside a spanning tree.
    std::vector<bool> in_tree(edges.size(), false);
    std::vector<bool> reached(verts.size(), false);
    std::deque<std::size_t> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto a = vertex_index(edges[i].u), b = vertex_index(edges[i].v);
        std::size_t y;
        if (a == x) y = b;
        else if (b == x) y = a;
        else continue;
        if (reached[y]) continue;
        reached[y] = true;
        in_tree[i] = true;
        queue.push_back(y);
      }
    }
    std::vector<int> generator(edges.size(), 0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!in_tree[i]) generator[i] = static_cast<int>(++count);
    }
    std::vector<std::vector<int>> relators;
    for (const auto& [a, b, c] : triangles) {
      std::vector<int> r;
      for (auto [x, y, s] : {std::tuple{a, b, 1}, std::tuple{b, c, 1}, std::tuple{a, c, -1}}) {
        const int gen = generator[edge_index[{x, y}]];
        if (gen != 0) r.push_back(s * gen);
      }
      relators.push_back(std::move(r));
    }
    out.simply_connected = tietze_trivial(count, std::move(relators), tietze_passes);
    if (out.simply_connected == true && !out.complex_h1_vanishes) {
      throw Error(ErrorCode::InvariantBreach, "simply connected complex with nonzero H_1");
    }
  } else {
    out.simply_connected = false;
  }
  return out;
}

namespace {

bool has_exceptional_triangle(const LabeledGraph& g) {
  for (const auto& t : enumerate_cliques(g, 3)) {
    if (t.size() != 3) continue;
    std::array<Label, 3> l{g.label(t[0], t[1]), g.label(t[0], t[2]), g.label(t[1], t[2])};
    std::sort(l.begin(), l.end());
    if (l[0] == 2 && l[1] == 3 && (l[2] == 3 || l[2] == 4 || l[2] == 5)) return true;
    if (l[0] == 2 && l[1] == 2 && l[2] % 2 == 1) return true;
  }
  return false;
}

// Edge with no spherical triangle proven to obstruct Sigma^2, if any.
std::optional<std::string> edge_necessity(const LabeledGraph& g, const std::vector<Edge>& failures) {
  const bool exceptional = has_exceptional_triangle(g);
  for (const auto& e : failures) {
    bool any_triangle = false;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if (u == e.u || u == e.v) continue;
      if (g.adjacent(u, e.u) && g.adjacent(u, e.v) && is_spherical(g, {e.u, e.v, u})) any_triangle = true;
    }
    const std::string name = g.name(e.u) + "-" + g.name(e.v);
    if (!any_triangle) return "edge " + name + " lies in no spherical triangle";
    if (e.label % 2 == 0) return "even edge " + name + " lies in no spherical triangle with a living vertex";
    if (!exceptional) return "edge " + name + " lies in no spherical triangle with a living vertex";
  }
  return std::nullopt;
}

std::optional<std::string> link_necessity(const LabeledGraph& g, const Character& chi, const LivingSubgraph& liv,
                                          const std::vector<Vertex>& failures) {
  for (Vertex v : failures) {
    const auto link = spherical_link(g, chi, v);
    if (link.empty()) return "dead vertex " + g.name(v) + " has an empty spherical link";
    unsigned long common = 0;
    for (const auto& cell : link.cells) {
      if (cell.size() == 2 && liv.is_dead_edge(cell[0], cell[1])) {
        common = std::gcd(common, static_cast<unsigned long>(g.label(cell[0], cell[1]) / 2));
      }
    }
    if (common != 1) return "spherical link of dead vertex " + g.name(v) + " is disconnected";
  }
  return std::nullopt;
}

Decision two_dimensional_decision(const LabeledGraph& g, const LivingSubgraph& liv) {
  TwoDimensionalConditions c;
  for (const auto& e : g.edges()) {
    if ((!liv.is_living(e.u) && !liv.is_living(e.v)) || liv.is_dead_edge(e.u, e.v)) c.bad_edges.push_back(e);
  }
  for (Vertex v : liv.dead) {
    std::size_t living = 0;
    for (Vertex u : g.neighbours(v)) living += liv.is_living(u);
    if (living != 1) c.bad_dead_vertices.push_back(v);
  }
  c.liv_tree = liv.liv_connected && liv.living_edges.size() + 1 == liv.living.size();
  std::string summary;
  if (!c.bad_edges.empty()) summary = "an edge has both ends dead or is dead";
  else if (!c.bad_dead_vertices.empty()) summary = "a dead vertex is not adjacent to a unique living vertex";
  else if (!c.liv_tree) summary = "Liv is not a tree";
  const bool yes = summary.empty();
  return verdict(yes ? Verdict::Yes : Verdict::No, Provenance::TwoDimensional,
                 yes ? "no dead edges, unique living neighbours and Liv is a tree" : summary, std::move(c));
}

}  // namespace

Sigma2Decision sigma2_decide(const LabeledGraph& g, const Character& chi, const DecideOptions& options) {
  validate_character(g, chi);
  const auto liv = living_analysis(g, chi);
  const auto flags = classify_group(g);
  Sigma2Decision out;

  if (flags.two_dimensional) {
    out.homotopical = out.homological = two_dimensional_decision(g, liv);
    out.stable = true;
    return out;
  }
  if (flags.coherent) {
    const bool yes = liv.liv_connected && liv.dominant;
    out.homotopical = out.homological =
        verdict(yes ? Verdict::Yes : Verdict::No, Provenance::Coherent,
                yes ? "Liv is connected and dominant" : "Liv is not connected and dominant", living_certificate(liv));
    out.stable = true;
    return out;
  }

  const auto s1 = sigma1_decide(g, chi, options);
  if (s1.verdict == Verdict::No || s1.verdict == Verdict::ConjecturalNo) {
    auto d = verdict(s1.verdict, Provenance::SigmaOneFailure, "not in Sigma^1: " + s1.summary, s1.certificate);
    out.homotopical = out.homological = d;
    return out;
  }

  auto conditions = sigma2_sufficient(g, chi, options.tietze_passes);
  if (conditions.homological()) {
    out.homological = verdict(Verdict::Yes, Provenance::LinkCriterion,
                              "edge, spherical-link and 1-acyclicity conditions hold", conditions);
    mark_kpi1(out.homological, flags, options);
    if (conditions.simply_connected == true) {
      out.homotopical = verdict(Verdict::Yes, Provenance::LinkCriterion,
                                "edge, spherical-link and simple-connectivity conditions hold", conditions);
      mark_kpi1(out.homotopical, flags, options);
    } else {
      out.homotopical = verdict(Verdict::Unknown, Provenance::LinkCriterion,
                                "complex is 1-acyclic but simple connectivity was not established", conditions);
    }
    out.homological.summary += conditional_suffix(out.homological);
    out.homotopical.summary += conditional_suffix(out.homotopical);
    return out;
  }

  Decision no;
  if (auto reason = edge_necessity(g, conditions.edge_failures)) {
    no = verdict(Verdict::No, Provenance::EdgeNecessity, *reason, conditions);
  } else if (auto reason = link_necessity(g, chi, liv, conditions.link_failures)) {
    no = verdict(Verdict::No, Provenance::LinkNecessity, *reason, conditions);
  } else {
    const auto report = kernel_homology_report(g, chi, field_menu(g, options));
    if (const auto* entry = report.infinite_in_degree(2)) {
      no = verdict(Verdict::No, Provenance::KernelHomology,
                   "H_2 of the kernel is infinite dimensional over " + entry->field,
                   HomologyCertificate{entry->field, entry->character, 2, entry->groups[2].free_rank});
    }
  }
  if (no.verdict == Verdict::No) {
    mark_kpi1(no, flags, options);
    no.summary += conditional_suffix(no);
    out.homotopical = out.homological = no;
    return out;
  }
  out.homotopical = out.homological =
      verdict(Verdict::Unknown, Provenance::SigmaTwoConjecture,
              "sufficient conditions fail and no obstruction was certified; the conjecture predicts No", conditions);
  return out;
}

namespace {

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::No || b == Verdict::No) return Verdict::No;
  if (a == Verdict::ConjecturalNo || b == Verdict::ConjecturalNo) return Verdict::ConjecturalNo;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Yes;
}

}  // namespace

FibringReport fibring_report(const LabeledGraph& g, const Character& chi, const DecideOptions& options) {
  if (!chi.is_discrete()) throw Error(ErrorCode::NonDiscreteCharacter, "fibring needs an integral character");
  validate_character(g, chi);
  const auto neg = chi.negated();
  const auto s1 = sigma1_decide(g, chi, options), s1n = sigma1_decide(g, neg, options);
  FibringReport r;
  r.finitely_generated = combine(s1.verdict, s1n.verdict);
  if (r.finitely_generated == Verdict::No || r.finitely_generated == Verdict::ConjecturalNo) {
    r.finitely_presented = r.fp2 = r.finitely_generated;
  } else {
    const auto s2 = sigma2_decide(g, chi, options), s2n = sigma2_decide(g, neg, options);
    r.finitely_presented = combine(s2.homotopical.verdict, s2n.homotopical.verdict);
    r.fp2 = combine(s2.homological.verdict, s2n.homological.verdict);
    r.all_finiteness = r.finitely_presented == Verdict::Yes && s2.stable && s2n.stable;
    for (const auto* d : {&s2.homotopical, &s2n.homotopical, &s2.homological, &s2n.homological}) {
      r.conditional_on_kpi1 = r.conditional_on_kpi1 || d->conditional_on_kpi1;
    }
  }
  if (r.finitely_generated == Verdict::No) {
    r.summary = "kernel not finitely generated";
  } else if (r.finitely_generated == Verdict::ConjecturalNo) {
    r.summary = "kernel conjecturally not finitely generated";
  } else if (r.finitely_generated == Verdict::Unknown) {
    r.summary = "finite generation of the kernel undecided";
  } else if (r.finitely_presented == Verdict::Yes) {
    r.summary = r.all_finiteness ? "kernel finitely presented (of type F_infinity)" : "kernel finitely presented";
  } else if (r.finitely_presented == Verdict::No) {
    r.summary = "kernel finitely generated but not finitely presented";
  } else if (r.fp2 == Verdict::Yes) {
    r.summary = "kernel finitely generated and of type FP_2; finite presentability undecided";
  } else {
    r.summary = "kernel finitely generated; finite presentability undecided";
  }
  if (r.conditional_on_kpi1) r.summary += " (conditional on the K(pi,1) conjecture)";

  const auto flags = classify_group(g);
  if (flags.two_dimensional) {
    // The odd trees, plus the single edge labelled 2 (free abelian of rank 2).
    const bool z2 = g.vertex_count() == 2 && g.edges().size() == 1 && g.edges().front().label == 2;
    r.derived_finitely_presented = flags.odd_tree || z2;
  }
  return r;
}

std::vector<std::vector<long>> enumerate_characters(const LabeledGraph& g, long bound) {
  if (bound < 1) throw Error(ErrorCode::SchemaError, "bound must be positive");
  const auto classes = odd_classes(g);
  const std::size_t k = classes.members.size();
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> out;
  std::vector<long> values(k, -bound);
  while (true) {
    if (std::any_of(values.begin(), values.end(), [](long x) { return x != 0; })) {
      std::vector<long> chi(g.vertex_count());
      for (std::size_t c = 0; c < k; ++c) {
        for (Vertex v : classes.members[c]) chi[v] = values[c];
      }
      long d = 0;
      for (long x : chi) d = std::gcd(d, std::abs(x));
      for (auto& x : chi) x /= d;
      if (seen.insert(chi).second) out.push_back(std::move(chi));
    }
    std::size_t i = k;
    while (i > 0 && values[i - 1] == bound) values[--i] = -bound;
    if (i == 0) break;
    ++values[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ScanEntry> scan(const LabeledGraph& g, long bound, const DecideOptions& options) {
  std::vector<ScanEntry> out;
  for (const auto& chi : enumerate_characters(g, bound)) {
    const auto c = make_character(chi);
    out.push_back({chi, sigma1_decide(g, c, options), sigma2_decide(g, c, options)});
  }
  return out;
}

}  // namespace artin
