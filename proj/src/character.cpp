#include "artin/character.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "artin/smith.hpp"

namespace artin {

bool Character::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Character::is_discrete() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Character Character::negated() const {
  Character out = *this;
  for (auto& q : out.values) q = -q;
  return out;
}

std::vector<long> Character::primitive() const {
  if (is_zero()) throw Error(ErrorCode::ZeroCharacter, "the zero character has no class");
  Integer den = 1;
  for (const auto& q : values) den = lcm(den, Integer(q.get_den()));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : values) {
    Integer x = q.get_num() * (den / q.get_den());
    g = gcd(g, x);
    ints.push_back(x);
  }
  std::vector<long> out;
  for (const auto& x : ints) {
    Integer y = x / g;
    if (!y.fits_slong_p()) throw Error(ErrorCode::SchemaError, "character value too large");
    out.push_back(y.get_si());
  }
  return out;
}

std::string Character::to_string(const LabeledGraph& g) const {
  std::string out;
  for (Vertex v = 0; v < values.size(); ++v) {
    out += (v ? ", " : "") + g.name(v) + "=" + values[v].get_str();
  }
  return out;
}

Character make_character(const std::vector<long>& values) {
  Character chi;
  for (long x : values) chi.values.emplace_back(x);
  return chi;
}

void validate_character(const LabeledGraph& g, const Character& chi) {
  if (chi.values.size() != g.vertex_count()) {
    throw Error(ErrorCode::SchemaError, "character has " + std::to_string(chi.values.size()) +
                                            " values for " + std::to_string(g.vertex_count()) + " vertices");
  }
  if (chi.is_zero()) throw Error(ErrorCode::ZeroCharacter, "character vanishes identically");
  for (const auto& e : g.edges()) {
    if (e.label % 2 == 1 && chi[e.u] != chi[e.v]) {
      throw Error(ErrorCode::OddEdgeMismatch, "odd edge " + g.name(e.u) + "-" + g.name(e.v) +
                                                  " joins different values");
    }
  }
}

bool LivingSubgraph::is_living(Vertex v) const {
  return std::binary_search(living.begin(), living.end(), v);
}

namespace {

bool same_edge(const Edge& e, Vertex u, Vertex v) {
  return (e.u == u && e.v == v) || (e.u == v && e.v == u);
}

}  // namespace

bool LivingSubgraph::is_dead_edge(Vertex u, Vertex v) const {
  return std::any_of(dead_edges.begin(), dead_edges.end(), [&](const Edge& e) { return same_edge(e, u, v); });
}

bool LivingSubgraph::is_three_dead(Vertex u, Vertex v) const {
  return std::any_of(three_dead.begin(), three_dead.end(),
                     [&](const ThreeDeadEdge& t) { return same_edge(t.edge, u, v); });
}

LivingSubgraph living_analysis(const LabeledGraph& g, const Character& chi) {
  validate_character(g, chi);
  LivingSubgraph out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    (sgn(chi[v]) != 0 ? out.living : out.dead).push_back(v);
  }
  for (const auto& e : g.edges()) {
    const bool both_living = sgn(chi[e.u]) != 0 && sgn(chi[e.v]) != 0;
    if (!both_living) continue;
    if (e.label % 2 == 0 && e.label >= 4 && sgn(chi[e.u] + chi[e.v]) == 0) {
      out.dead_edges.push_back(e);
    } else {
      out.living_edges.push_back(e);
    }
  }
  out.components = connected_components(g, out.living, out.dead_edges);
  out.liv_connected = out.components.size() == 1;
  out.liv0_connected = connected_components(g, out.living).size() == 1;
  for (Vertex d : out.dead) {
    auto nb = g.neighbours(d);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return sgn(chi[w]) != 0; })) {
      out.undominated.push_back(d);
    }
  }
  out.dominant = out.undominated.empty();
  for (const auto& e : g.edges()) {
    if (e.label != 4) continue;
    for (Vertex z = 0; z < g.vertex_count(); ++z) {
      if (z == e.u || z == e.v || !g.adjacent(z, e.u) || !g.adjacent(z, e.v)) continue;
      for (auto [end, middle] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (g.label(middle, z) == 3 && g.label(end, z) == 2 && sgn(chi[end] + 2 * chi[middle]) == 0) {
          out.three_dead.push_back({e, end, middle, z});
        }
      }
    }
  }
  return out;
}

bool SphericalLink::connected() const {
  if (vertices.empty()) return false;
  std::map<Vertex, Vertex> parent;
  for (Vertex v : vertices) parent[v] = v;
  auto root = [&](Vertex x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& c : cells) {
    if (c.size() == 2) parent[root(c[0])] = root(c[1]);
  }
  const Vertex r = root(vertices.front());
  return std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) { return root(v) == r; });
}

SphericalLink spherical_link(const LabeledGraph& g, const Character& chi, Vertex v) {
  const auto liv = living_analysis(g, chi);
  SphericalLink out{v, {}, {}};
  for (Vertex u : g.neighbours(v)) {
    if (liv.is_living(u)) out.vertices.push_back(u);
  }
  std::vector<Vertex> current;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < out.vertices.size(); ++i) {
      Vertex u = out.vertices[i];
      bool clique = std::all_of(current.begin(), current.end(),
                                [&](Vertex w) { return g.adjacent(u, w); });
      if (!clique) continue;
      current.push_back(u);
      auto with_centre = current;
      with_centre.push_back(v);
      if (is_spherical(g, current) && is_spherical(g, with_centre)) {
        out.cells.push_back(current);
        self(self, i + 1);
      }
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::stable_sort(out.cells.begin(), out.cells.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::MovePreconditionViolated, message);
}

Reduction rebuild(const LabeledGraph& g, const Character& chi, const std::vector<bool>& keep,
                  const std::map<std::pair<Vertex, Vertex>, Label>& labels, std::string description) {
  std::vector<std::string> names;
  Character out_chi;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!keep[v]) continue;
    names.push_back(g.name(v));
    out_chi.values.push_back(chi[v]);
  }
  std::vector<NamedEdge> edges;
  for (const auto& [uv, l] : labels) {
    if (keep[uv.first] && keep[uv.second]) edges.push_back({g.name(uv.first), g.name(uv.second), l});
  }
  return {LabeledGraph(std::move(names), edges), std::move(out_chi), std::move(description)};
}

std::map<std::pair<Vertex, Vertex>, Label> label_map(const LabeledGraph& g) {
  std::map<std::pair<Vertex, Vertex>, Label> out;
  for (const auto& e : g.edges()) out[{e.u, e.v}] = e.label;
  return out;
}

std::pair<Vertex, Vertex> key(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

Reduction reduce(const LabeledGraph& g, const Character& chi, const Move& move) {
  validate_character(g, chi);
  const std::size_t n = g.vertex_count();
  auto check_vertex = [&](Vertex v) {
    if (v >= n) throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v));
  };
  std::vector<bool> keep(n, true);
  auto labels = label_map(g);

  if (const auto* m = std::get_if<DeleteDeadVertex>(&move)) {
    check_vertex(m->v);
    require(sgn(chi[m->v]) == 0, "only vertices with chi = 0 can be deleted");
    keep[m->v] = false;
    return rebuild(g, chi, keep, labels, "delete " + g.name(m->v));
  }
  if (const auto* m = std::get_if<AddEvenEdge>(&move)) {
    check_vertex(m->u);
    check_vertex(m->v);
    require(m->u != m->v && !g.adjacent(m->u, m->v), "endpoints must be distinct and non-adjacent");
    require(m->label >= 2 && m->label % 2 == 0, "added edge label must be even");
    labels[key(m->u, m->v)] = m->label;
    return rebuild(g, chi, keep, labels,
                   "add edge " + g.name(m->u) + "-" + g.name(m->v) + ":" + std::to_string(m->label));
  }
  if (const auto* m = std::get_if<AddEqualEdge>(&move)) {
    check_vertex(m->u);
    check_vertex(m->v);
    require(m->u != m->v && !g.adjacent(m->u, m->v), "endpoints must be distinct and non-adjacent");
    require(m->label >= 2, "labels must be at least 2");
    require(chi[m->u] == chi[m->v], "endpoints must have equal chi");
    labels[key(m->u, m->v)] = m->label;
    return rebuild(g, chi, keep, labels,
                   "add edge " + g.name(m->u) + "-" + g.name(m->v) + ":" + std::to_string(m->label));
  }
  if (const auto* m = std::get_if<ReduceLabel>(&move)) {
    check_vertex(m->u);
    check_vertex(m->v);
    require(g.adjacent(m->u, m->v), "no edge to relabel");
    const Label l = g.label(m->u, m->v);
    require(m->divisor >= 2 && l % m->divisor == 0, "new label must be a divisor >= 2 of the old one");
    require(m->divisor % 2 == 0 || chi[m->u] == chi[m->v], "odd labels need equal chi at the endpoints");
    labels[key(m->u, m->v)] = m->divisor;
    return rebuild(g, chi, keep, labels,
                   "relabel " + g.name(m->u) + "-" + g.name(m->v) + ":" + std::to_string(m->divisor));
  }
  const auto& m = std::get<IdentifyVertices>(move);
  check_vertex(m.u);
  check_vertex(m.v);
  require(m.u != m.v, "cannot identify a vertex with itself");
  require(chi[m.u] == chi[m.v], "identified vertices must have equal chi");
  // Merge the later vertex into the earlier one; parallel labels combine by
  // gcd, label 1 forces a further identification. Pending merges are FIFO.
  std::deque<std::pair<Vertex, Vertex>> pending{{m.u, m.v}};
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto root = [&](Vertex x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::string description = "identify";
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    a = root(a);
    b = root(b);
    if (a == b) continue;
    const Vertex survivor = std::min(a, b), gone = std::max(a, b);
    if (chi[survivor] != chi[gone]) throw Error(ErrorCode::InvariantBreach, "identification changes chi");
    description += " " + g.name(gone) + "->" + g.name(survivor);
    parent[gone] = survivor;
    keep[gone] = false;
    std::map<std::pair<Vertex, Vertex>, Label> next;
    std::vector<std::pair<Vertex, Label>> moved;
    for (const auto& [uv, l] : labels) {
      if (uv.first == gone || uv.second == gone) {
        moved.emplace_back(uv.first == gone ? uv.second : uv.first, l);
      } else {
        next[uv] = l;
      }
    }
    for (auto [x, l] : moved) {
      if (x == survivor) continue;  // becomes a loop
      auto k = key(survivor, x);
      auto it = next.find(k);
      const Label combined = it == next.end() ? l : std::gcd(it->second, l);
      if (combined == 1) {
        next.erase(k);
        pending.emplace_back(survivor, x);
      } else {
        next[k] = combined;
      }
    }
    labels = std::move(next);
  }
  return rebuild(g, chi, keep, labels, description);
}

QuotientCheck validate_quotient(const LabeledGraph& g, const Character& chi, const FiniteQuotient& q) {
  const std::size_t n = g.vertex_count(), r = q.orders.size();
  if (!chi.is_discrete()) throw Error(ErrorCode::NonDiscreteCharacter, "quotient checks need integral chi");
  if (q.phi.size() != n) throw Error(ErrorCode::SchemaError, "phi must give residues for every vertex");
  for (unsigned m : q.orders) {
    if (m == 0) throw Error(ErrorCode::BadResidue, "cyclic factor of order 0");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (q.phi[v].size() != r) throw Error(ErrorCode::SchemaError, "phi(" + g.name(v) + ") has wrong length");
    for (std::size_t i = 0; i < r; ++i) {
      if (q.phi[v][i] >= q.orders[i]) {
        throw Error(ErrorCode::BadResidue, "phi(" + g.name(v) + ") residue out of range");
      }
    }
  }
  for (const auto& e : g.edges()) {
    if (e.label % 2 == 1 && q.phi[e.u] != q.phi[e.v]) {
      throw Error(ErrorCode::OddEdgeMismatch, "phi differs across odd edge " + g.name(e.u) + "-" + g.name(e.v));
    }
  }
  auto full_lattice = [](const Matrix<Integer>& rows) {
    auto snf = integer_snf(rows);
    if (snf.rank != rows.cols()) return false;
    for (std::size_t i = 0; i < snf.rank; ++i) {
      if (snf.diagonal[i] != 1) return false;
    }
    return true;
  };

  Matrix<Integer> psi(n + r, 1 + r, 0);
  for (Vertex v = 0; v < n; ++v) {
    psi(v, 0) = chi[v].get_num();
    for (std::size_t i = 0; i < r; ++i) psi(v, 1 + i) = q.phi[v][i];
  }
  for (std::size_t i = 0; i < r; ++i) psi(n + i, 1 + i) = q.orders[i];
  QuotientCheck out{full_lattice(psi), true};

  if (r > 0) {
    // Kernel of chi on Z^n from the column transform of its Smith form.
    Matrix<Integer> row(1, n, 0);
    for (Vertex v = 0; v < n; ++v) row(0, v) = chi[v].get_num();
    auto snf = integer_snf(row, true);
    const auto& v_mat = *snf.v;
    std::vector<std::vector<Integer>> kernel;
    for (std::size_t j = snf.rank; j < n; ++j) {
      std::vector<Integer> image(r, 0);
      for (Vertex x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < r; ++i) image[i] += v_mat(x, j) * q.phi[x][i];
      }
      kernel.push_back(std::move(image));
    }
    Matrix<Integer> rows(kernel.size() + r, r, 0);
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      for (std::size_t i = 0; i < r; ++i) rows(k, i) = kernel[k][i];
    }
    for (std::size_t i = 0; i < r; ++i) rows(kernel.size() + i, i) = q.orders[i];
    out.phi_restricted_surjective = full_lattice(rows);
  }
  return out;
}

}  // namespace artin
