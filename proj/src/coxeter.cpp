#include "artin/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "artin/error.hpp"

namespace artin {

std::string CoxeterType::description() const {
  if (!spherical) return "non-spherical";
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : " x ") + f.name;
  return out.empty() ? "trivial" : out;
}

namespace {

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer power_of_two(unsigned n) {
  Integer r = 1;
  r <<= n;
  return r;
}

struct Component {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // Dynkin edges, label >= 3
};

std::vector<Vertex> dynkin_neighbours(const Component& c, Vertex v) {
  std::vector<Vertex> out;
  for (const auto& e : c.edges) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  return out;
}

// Vertices of a path component in walking order, starting from the end
// nearest the edge selected by `start_near` when given.
std::vector<Vertex> walk_path(const Component& c, std::optional<Vertex> from = std::nullopt) {
  Vertex start = c.vertices.front();
  if (from) {
    start = *from;
  } else {
    for (Vertex v : c.vertices) {
      if (dynkin_neighbours(c, v).size() == 1) {
        start = v;
        break;
      }
    }
  }
  std::vector<Vertex> path{start};
  std::optional<Vertex> prev;
  while (path.size() < c.vertices.size()) {
    for (Vertex w : dynkin_neighbours(c, path.back())) {
      if (!prev || w != *prev) {
        prev = path.back();
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

Label component_label(const Component& c, Vertex a, Vertex b) {
  for (const auto& e : c.edges) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return e.label;
  }
  return 2;
}

std::optional<CoxeterFactor> classify_component(const Component& c) {
  const auto n = static_cast<unsigned>(c.vertices.size());
  CoxeterFactor f{"", c.vertices, 0};
  if (n == 1) {
    f.name = "A1";
    f.order = 2;
    return f;
  }
  if (n == 2) {
    const Label m = c.edges.front().label;
    f.name = m == 3 ? "A2" : "I2(" + std::to_string(m) + ")";
    f.order = 2 * m;
    return f;
  }
  if (c.edges.size() != n - 1) return std::nullopt;  // contains a cycle
  unsigned heavy = 0;
  for (const auto& e : c.edges) {
    if (e.label >= 6) return std::nullopt;
    if (e.label >= 4) ++heavy;
  }
  if (heavy > 1) return std::nullopt;
  std::vector<Vertex> branch;
  for (Vertex v : c.vertices) {
    auto d = dynkin_neighbours(c, v).size();
    if (d > 3) return std::nullopt;
    if (d == 3) branch.push_back(v);
  }
  if (heavy == 1) {
    if (!branch.empty()) return std::nullopt;
    auto path = walk_path(c);
    std::size_t pos = 0;
    Label label = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      Label l = component_label(c, path[i], path[i + 1]);
      if (l >= 4) {
        pos = i;
        label = l;
      }
    }
    const bool at_end = pos == 0 || pos == n - 2;
    if (label == 4 && at_end) {
      f.name = "B" + std::to_string(n);
      f.order = power_of_two(n) * factorial(n);
      return f;
    }
    if (label == 4 && n == 4) {
      f.name = "F4";
      f.order = 1152;
      return f;
    }
    if (label == 5 && at_end && n <= 4) {
      f.name = n == 3 ? "H3" : "H4";
      f.order = n == 3 ? 120 : 14400;
      return f;
    }
    return std::nullopt;
  }
  if (branch.empty()) {
    f.name = "A" + std::to_string(n);
    f.order = factorial(n + 1);
    return f;
  }
  if (branch.size() > 1) return std::nullopt;
  // Arm lengths from the branch vertex.
  std::vector<unsigned> arms;
  for (Vertex w : dynkin_neighbours(c, branch.front())) {
    unsigned len = 1;
    Vertex prev = branch.front(), cur = w;
    for (;;) {
      std::optional<Vertex> next;
      for (Vertex x : dynkin_neighbours(c, cur)) {
        if (x != prev) next = x;
      }
      if (!next) break;
      prev = cur;
      cur = *next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    f.name = "D" + std::to_string(n);
    f.order = power_of_two(n - 1) * factorial(n);
    return f;
  }
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
    static const unsigned long orders[] = {51840, 2903040, 696729600};
    f.name = "E" + std::to_string(n);
    f.order = orders[arms[2] - 2];
    return f;
  }
  return std::nullopt;
}

}  // namespace

CoxeterType classify(const LabeledGraph& g, const std::vector<Vertex>& subset) {
  std::vector<Vertex> x = subset;
  std::sort(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (!g.adjacent(x[i], x[j])) return {};
    }
  }
  // Dynkin components: drop label-2 edges.
  std::vector<Component> comps;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex s : x) {
    if (seen[s]) continue;
    Component c;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      Vertex a = queue.front();
      queue.pop_front();
      c.vertices.push_back(a);
      for (Vertex b : x) {
        if (b != a && g.label(a, b) >= 3 && !seen[b]) {
          seen[b] = true;
          queue.push_back(b);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < c.vertices.size(); ++j) {
        Label l = g.label(c.vertices[i], c.vertices[j]);
        if (l >= 3) c.edges.push_back({c.vertices[i], c.vertices[j], l});
      }
    }
    comps.push_back(std::move(c));
  }
  CoxeterType out;
  out.order = 1;
  for (const auto& c : comps) {
    auto f = classify_component(c);
    if (!f) return {};
    out.order *= f->order;
    out.factors.push_back(std::move(*f));
  }
  out.spherical = true;
  return out;
}

bool is_spherical(const LabeledGraph& g, const std::vector<Vertex>& subset) {
  return classify(g, subset).spherical;
}

namespace {

using Perm = std::vector<std::uint16_t>;

// a + b sqrt(5)
struct QuadraticFive {
  Rational a, b;

  QuadraticFive operator+(const QuadraticFive& o) const { return {a + o.a, b + o.b}; }
  QuadraticFive operator-(const QuadraticFive& o) const { return {a - o.a, b - o.b}; }
  QuadraticFive operator*(const QuadraticFive& o) const { return {a * o.a + 5 * b * o.b, a * o.b + b * o.a}; }
  bool operator<(const QuadraticFive& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  bool operator==(const QuadraticFive&) const = default;
};

// Permutations of the 30 roots of H3 induced by the simple reflections,
// for the Dynkin path r0 -5- r1 -3- r2.
std::vector<Perm> h3_generators() {
  using Root = std::vector<QuadraticFive>;
  const QuadraticFive zero{0, 0}, two{2, 0};
  const QuadraticFive five_link{Rational(-1, 2), Rational(-1, 2)};  // -2cos(pi/5)
  const QuadraticFive three_link{-1, 0};                            // -2cos(pi/3)
  const QuadraticFive gram[3][3] = {
      {two, five_link, zero}, {five_link, two, three_link}, {zero, three_link, two}};
  auto reflect = [&](int i, const Root& x) {
    QuadraticFive c = zero;
    for (int j = 0; j < 3; ++j) c = c + gram[i][j] * x[static_cast<std::size_t>(j)];
    Root y = x;
    y[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] - c;
    return y;
  };
  std::map<Root, std::size_t> index;
  std::vector<Root> roots;
  std::deque<Root> queue;
  for (int i = 0; i < 3; ++i) {
    Root r(3, zero);
    r[static_cast<std::size_t>(i)] = {1, 0};
    index.emplace(r, roots.size());
    roots.push_back(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < 3; ++i) {
      Root y = reflect(i, r);
      if (index.emplace(y, roots.size()).second) {
        roots.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::vector<Perm> gens;
  for (int i = 0; i < 3; ++i) {
    Perm p(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) p[k] = static_cast<std::uint16_t>(index.at(reflect(i, roots[k])));
    gens.push_back(std::move(p));
  }
  return gens;
}

Perm swap_perm(std::size_t size, std::vector<std::pair<std::size_t, std::size_t>> swaps) {
  Perm p(size);
  for (std::size_t i = 0; i < size; ++i) p[i] = static_cast<std::uint16_t>(i);
  for (auto [a, b] : swaps) std::swap(p[a], p[b]);
  return p;
}

// Faithful permutation representation of an irreducible factor of rank <= 3.
// Returns the generator permutation of each factor vertex.
std::map<Vertex, Perm> factor_generators(const LabeledGraph& g, const CoxeterFactor& f) {
  const auto& vs = f.vertices;
  std::map<Vertex, Perm> out;
  if (vs.size() == 1) {
    out[vs[0]] = swap_perm(2, {{0, 1}});
    return out;
  }
  if (vs.size() == 2) {
    const std::size_t m = g.label(vs[0], vs[1]);
    Perm s(m), t(m);
    for (std::size_t i = 0; i < m; ++i) {
      s[i] = static_cast<std::uint16_t>((m - i) % m);
      t[i] = static_cast<std::uint16_t>((m + 1 - i) % m);
    }
    out[vs[0]] = s;
    out[vs[1]] = t;
    return out;
  }
  // Rank 3: orient the path so that a heavy edge, if any, comes first.
  Component c{vs, {}};
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (Label l = g.label(vs[i], vs[j]); l >= 3) c.edges.push_back({vs[i], vs[j], l});
    }
  }
  std::optional<Vertex> heavy_end;
  for (const auto& e : c.edges) {
    if (e.label >= 4) {
      heavy_end = dynkin_neighbours(c, e.u).size() == 1 ? e.u : e.v;
    }
  }
  auto path = walk_path(c, heavy_end);
  if (f.name == "A3") {
    for (std::size_t i = 0; i < 3; ++i) out[path[i]] = swap_perm(4, {{i, i + 1}});
  } else if (f.name == "B3") {
    // Signed permutations of three coordinates; point 2k is +e_k, 2k+1 is -e_k.
    out[path[0]] = swap_perm(6, {{0, 1}});
    out[path[1]] = swap_perm(6, {{0, 2}, {1, 3}});
    out[path[2]] = swap_perm(6, {{2, 4}, {3, 5}});
  } else if (f.name == "H3") {
    auto gens = h3_generators();
    for (std::size_t i = 0; i < 3; ++i) out[path[i]] = gens[i];
  } else {
    throw Error(ErrorCode::InvariantBreach, "no model for factor " + f.name);
  }
  return out;
}

}  // namespace

SignedWordSum minimal_coset_representatives(const LabeledGraph& g, const std::vector<Vertex>& x_in, Vertex v) {
  std::vector<Vertex> x = x_in;
  std::sort(x.begin(), x.end());
  if (std::find(x.begin(), x.end(), v) == x.end()) {
    throw Error(ErrorCode::UnknownVertex, "removed vertex is not in the clique");
  }
  if (x.size() > kMaxCellRank) {
    throw Error(ErrorCode::RankTooLarge, "cells of rank " + std::to_string(x.size()) + " are not enumerated");
  }
  const auto type = classify(g, x);
  if (!type.spherical) throw Error(ErrorCode::NotSpherical, "vertex set is not spherical");

  // Disjoint union of the factor representations.
  std::map<Vertex, Perm> gens;
  std::size_t offset = 0;
  std::vector<std::pair<std::size_t, std::map<Vertex, Perm>>> parts;
  for (const auto& f : type.factors) {
    auto part = factor_generators(g, f);
    parts.emplace_back(offset, part);
    offset += part.begin()->second.size();
  }
  for (const auto& [start, part] : parts) {
    for (Vertex a : x) {
      Perm& p = gens[a];
      if (p.empty()) {
        p.resize(offset);
        for (std::size_t i = 0; i < offset; ++i) p[i] = static_cast<std::uint16_t>(i);
      }
      if (auto it = part.find(a); it != part.end()) {
        for (std::size_t i = 0; i < it->second.size(); ++i) {
          p[start + i] = static_cast<std::uint16_t>(start + it->second[i]);
        }
      }
    }
  }

  // Breadth-first search of the Cayley graph, right multiplication.
  auto compose = [](const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
  };
  Perm identity(offset);
  for (std::size_t i = 0; i < offset; ++i) identity[i] = static_cast<std::uint16_t>(i);
  std::map<Perm, std::size_t> index{{identity, 0}};
  std::vector<Perm> elements{identity};
  std::vector<std::vector<Vertex>> words{{}};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (Vertex a : x) {
      Perm next = compose(elements[k], gens.at(a));
      if (index.emplace(next, elements.size()).second) {
        elements.push_back(next);
        auto w = words[k];
        w.push_back(a);
        words.push_back(std::move(w));
      }
    }
  }
  if (Integer(static_cast<unsigned long>(elements.size())) != type.order) {
    throw Error(ErrorCode::InvariantBreach, "enumerated group has the wrong order");
  }

  SignedWordSum out;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    bool minimal = true;
    for (Vertex a : x) {
      if (a == v) continue;
      auto j = index.at(compose(elements[k], gens.at(a)));
      if (words[j].size() < words[k].size()) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back({words[k], words[k].size() % 2 == 0 ? 1 : -1});
  }
  std::vector<Vertex> rest;
  for (Vertex a : x) {
    if (a != v) rest.push_back(a);
  }
  const Integer sub_order = rest.empty() ? Integer(1) : classify(g, rest).order;
  if (Integer(static_cast<unsigned long>(out.size())) * sub_order != type.order) {
    throw Error(ErrorCode::InvariantBreach, "coset representative count mismatch");
  }
  return out;
}

}  // namespace artin
