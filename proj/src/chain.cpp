#include "artin/chain.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "artin/error.hpp"
#include "artin/number_theory.hpp"

namespace artin {

std::size_t HomologyGroup::dimension() const {
  std::size_t d = 0;
  for (const auto& f : torsion) d += static_cast<std::size_t>(f.degree);
  return d;
}

SalvettiCells salvetti_cells(const LabeledGraph& g) {
  SalvettiCells out;
  out.cells[0].push_back({});
  for (const auto& clique : enumerate_cliques(g, 3)) {
    if (clique.size() == 3 && !is_spherical(g, clique)) continue;
    out.cells[clique.size()].push_back(clique);
  }
  for (std::size_t k = 1; k < 4; ++k) {
    std::map<std::vector<Vertex>, std::size_t> lower;
    for (std::size_t i = 0; i < out.cells[k - 1].size(); ++i) lower.emplace(out.cells[k - 1][i], i);
    for (const auto& x : out.cells[k]) {
      std::vector<SalvettiCells::Face> faces;
      for (std::size_t pos = 0; pos < x.size(); ++pos) {
        auto face = x;
        face.erase(face.begin() + static_cast<long>(pos));
        faces.push_back({lower.at(face), pos % 2 == 0 ? 1 : -1, minimal_coset_representatives(g, x, x[pos])});
      }
      out.faces[k].push_back(std::move(faces));
    }
  }
  return out;
}

std::string FieldSpec::name() const {
  return characteristic == 0 ? "Q" : "F" + std::to_string(characteristic);
}

FieldSpec parse_field(const std::string& text) {
  if (text == "Q" || text == "QQ") return {0};
  std::string digits;
  if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f')) {
    digits = text.substr(text[1] == '_' ? 2 : 1);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 9) {
    throw Error(ErrorCode::SchemaError, "unknown field '" + text + "' (use Q or Fp)");
  }
  const unsigned long p = std::stoul(digits);
  if (!is_prime(p)) throw Error(ErrorCode::SchemaError, "F" + digits + " is not a prime field");
  return {p};
}

std::vector<FieldSpec> default_field_menu(const LabeledGraph& g) {
  std::set<unsigned long> primes;
  for (const auto& e : g.edges()) {
    for (auto p : prime_factors(e.label)) primes.insert(p);
  }
  std::vector<FieldSpec> out{{0}};
  for (auto p : primes) out.push_back({p});
  return out;
}

const FieldHomology* KernelHomologyReport::infinite_in_degree(std::size_t n) const {
  for (const auto& e : entries) {
    if (n < e.groups.size() && !e.groups[n].finite_dimensional()) return &e;
  }
  return nullptr;
}

KernelHomologyReport kernel_homology_report(const LabeledGraph& g, const SalvettiCells& cells,
                                            const Character& chi, const std::vector<FieldSpec>& fields) {
  validate_character(g, chi);
  KernelHomologyReport out{chi.primitive(), {}};
  for (const auto& spec : fields) {
    FieldHomology entry{spec.name(), std::nullopt, {}};
    if (spec.characteristic == 0) {
      entry.groups = homology(build_salvetti_complex(cells, out.chi, RationalField{}));
    } else {
      entry.groups = homology(build_salvetti_complex(cells, out.chi, PrimeField(spec.characteristic)));
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

KernelHomologyReport kernel_homology_report(const LabeledGraph& g, const SalvettiCells& cells,
                                            const Character& chi, const Twist& twist) {
  validate_character(g, chi);
  KernelHomologyReport out{chi.primitive(), {}};
  validate_quotient(g, make_character(out.chi), twist.quotient);
  const FiniteAbelianGroup group(twist.quotient.orders);
  const CyclotomicField field(group.exponent());
  auto characters = twist.characters.empty() ? group.elements() : twist.characters;
  for (const auto& mu : characters) {
    if (mu.size() != group.rank()) throw Error(ErrorCode::SchemaError, "character has the wrong length");
    std::function<CyclotomicElement(Vertex)> letter = [&](Vertex a) {
      return field.root_of_unity(group.character_exponent(mu, twist.quotient.phi[a]));
    };
    FieldHomology entry{field.name(), mu, homology(build_salvetti_complex(cells, out.chi, field, letter))};
    out.entries.push_back(std::move(entry));
  }
  return out;
}

KernelHomologyReport kernel_homology_report(const LabeledGraph& g, const Character& chi,
                                            const std::vector<FieldSpec>& fields) {
  return kernel_homology_report(g, salvetti_cells(g), chi, fields);
}

KernelHomologyReport kernel_homology_report(const LabeledGraph& g, const Character& chi, const Twist& twist) {
  return kernel_homology_report(g, salvetti_cells(g), chi, twist);
}

std::vector<Edge> validate_cut(const LabeledGraph& g, const Character& chi, const Cut& cut) {
  const auto liv = living_analysis(g, chi);
  std::vector<int> side(g.vertex_count(), 0);
  for (auto [list, mark] : {std::pair{&cut.side_one, 1}, std::pair{&cut.side_two, 2}}) {
    for (Vertex v : *list) {
      if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "cut vertex out of range");
      if (!liv.is_living(v)) throw Error(ErrorCode::CutInvalid, g.name(v) + " is not living");
      if (side[v] != 0) throw Error(ErrorCode::CutInvalid, g.name(v) + " is on both sides");
      side[v] = mark;
    }
  }
  if (cut.side_one.empty() || cut.side_two.empty()) throw Error(ErrorCode::CutInvalid, "a side is empty");
  for (Vertex v : liv.living) {
    if (side[v] == 0) throw Error(ErrorCode::CutInvalid, g.name(v) + " is on neither side");
  }
  std::vector<Edge> crossing;
  for (const auto& e : g.edges()) {
    if (side[e.u] == 0 || side[e.v] == 0 || side[e.u] == side[e.v]) continue;
    if (!liv.is_dead_edge(e.u, e.v)) {
      throw Error(ErrorCode::CutInvalid, "living edge " + g.name(e.u) + "-" + g.name(e.v) + " crosses the cut");
    }
    crossing.push_back(e);
  }
  return crossing;
}

std::vector<GroupRingElement> normalized_h1_obstruction(const LabeledGraph& g, const Character& chi,
                                                        const Cut& cut, const FiniteQuotient& q) {
  const auto liv = living_analysis(g, chi);
  if (!liv.liv0_connected || liv.liv_connected) {
    throw Error(ErrorCode::CutInvalid, "needs a connected living subgraph that dead edges disconnect");
  }
  const auto crossing = validate_cut(g, chi, cut);
  validate_quotient(g, make_character(chi.primitive()), q);
  const FiniteAbelianGroup group(q.orders);
  std::vector<GroupRingElement> out;
  for (const auto& e : crossing) {
    const auto g_e = group.add(q.phi[e.u], q.phi[e.v]);
    GroupRingElement p;
    for (unsigned j = 0; j < e.label / 2; ++j) p.add_term(group.scale(g_e, j), 1);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace artin
