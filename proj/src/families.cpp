#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>

#include "artin/coxeter.hpp"
#include "artin/number_theory.hpp"
#include "artin/sigma.hpp"
#include "detail/cycles.hpp"

namespace artin {

namespace detail {

std::vector<std::size_t> order_cycle(const std::vector<MultiEdge>& edges, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> order{subset.front()};
  std::size_t current = edges[subset.front()].b;
  while (order.size() < subset.size()) {
    bool advanced = false;
    for (std::size_t e : subset) {
      if (std::find(order.begin(), order.end(), e) != order.end()) continue;
      if (edges[e].a == current || edges[e].b == current) {
        current = edges[e].a == current ? edges[e].b : edges[e].a;
        order.push_back(e);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return order;
}

CycleSet even_simple_cycles(const std::vector<MultiEdge>& edges, std::size_t vertex_count) {
  CycleSet out;
  const std::size_t m = edges.size();
  if (m <= kExactCycleLimit) {
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size < 2 || size % 2 == 1) continue;
      std::vector<std::size_t> degree(vertex_count, 0);
      std::vector<std::size_t> subset;
      for (std::size_t e = 0; e < m; ++e) {
        if (mask & (std::uint32_t{1} << e)) {
          subset.push_back(e);
          ++degree[edges[e].a];
          ++degree[edges[e].b];
        }
      }
      if (std::any_of(degree.begin(), degree.end(), [](std::size_t d) { return d != 0 && d != 2; })) continue;
      auto order = order_cycle(edges, subset);
      if (order.size() == subset.size()) out.cycles.push_back(std::move(order));
    }
    return out;
  }
  // Fundamental cycles of a spanning forest.
  out.exact = false;
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::vector<std::size_t> tree;
  std::vector<std::size_t> extra;
  for (std::size_t e = 0; e < m; ++e) {
    auto ra = root(edges[e].a), rb = root(edges[e].b);
    if (ra == rb) {
      extra.push_back(e);
    } else {
      parent[ra] = rb;
      tree.push_back(e);
    }
  }
  for (std::size_t e : extra) {
    // Tree path between the endpoints by breadth-first search.
    std::vector<std::optional<std::size_t>> via(vertex_count);
    std::vector<bool> seen(vertex_count, false);
    std::deque<std::size_t> queue{edges[e].a};
    seen[edges[e].a] = true;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (std::size_t t : tree) {
        std::size_t y;
        if (edges[t].a == x) y = edges[t].b;
        else if (edges[t].b == x) y = edges[t].a;
        else continue;
        if (seen[y]) continue;
        seen[y] = true;
        via[y] = t;
        queue.push_back(y);
      }
    }
    std::vector<std::size_t> subset{e};
    std::size_t x = edges[e].b;
    while (x != edges[e].a) {
      const auto t = *via[x];
      subset.push_back(t);
      x = edges[t].a == x ? edges[t].b : edges[t].a;
    }
    if (subset.size() % 2 == 0) out.cycles.push_back(order_cycle(edges, subset));
  }
  return out;
}

namespace {

// Union-find carrying the parity of each node relative to its root.
class ParityUnion {
 public:
  explicit ParityUnion(std::size_t n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::pair<std::size_t, int> find(std::size_t x) const {
    int p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }

  // Requires parity(x) xor parity(y) == rel; false on contradiction.
  bool unite(std::size_t x, std::size_t y, int rel) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == rel;
    parent_[rx] = ry;
    parity_[rx] = px ^ py ^ rel;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

}  // namespace

std::optional<std::vector<int>> cycle_parities(const CycleSet& cycles, const std::vector<std::size_t>& colour) {
  ParityUnion signs(colour.size());
  for (const auto& cycle : cycles.cycles) {
    std::map<std::size_t, std::vector<std::size_t>> positions;
    for (std::size_t i = 0; i < cycle.size(); ++i) positions[colour[cycle[i]]].push_back(i);
    for (const auto& [c, pos] : positions) {
      if (pos.size() != 2) return std::nullopt;
      const int rel = static_cast<int>((pos[1] - pos[0] - 1) % 2);
      if (!signs.unite(cycle[pos[0]], cycle[pos[1]], rel)) return std::nullopt;
    }
  }
  std::vector<int> out;
  for (std::size_t e = 0; e < colour.size(); ++e) out.push_back(signs.find(e).second ? -1 : 1);
  return out;
}

}  // namespace detail

namespace {

unsigned long smallest_prime(unsigned long n) { return prime_factors(n).front(); }

}  // namespace

std::optional<BalancedColouring> balanced_structure(const LabeledGraph& g) {
  BalancedColouring out{collapse_to_even_core(g), {}, {}, {}, true};
  const auto& edges = out.core.edges;
  const std::size_t m = edges.size();
  const auto cycles = detail::even_simple_cycles(edges, out.core.vertex_count());
  out.exact = cycles.exact;

  std::vector<std::vector<std::size_t>> cycles_of(m);
  std::vector<std::size_t> last_edge(cycles.cycles.size(), 0);
  for (std::size_t c = 0; c < cycles.cycles.size(); ++c) {
    for (std::size_t e : cycles.cycles[c]) {
      cycles_of[e].push_back(c);
      last_edge[c] = std::max(last_edge[c], e);
    }
  }
  std::vector<std::size_t> colour(m, 0);
  std::vector<unsigned long> class_gcd;
  auto cycle_ok = [&](std::size_t c, std::size_t upto, bool complete) {
    std::vector<std::size_t> count(class_gcd.size(), 0);
    for (std::size_t e : cycles.cycles[c]) {
      if (e <= upto) ++count[colour[e]];
    }
    return std::all_of(count.begin(), count.end(),
                       [&](std::size_t k) { return complete ? (k == 0 || k == 2) : k <= 2; });
  };
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) {
      auto parity = detail::cycle_parities(cycles, colour);
      if (!parity) return false;
      out.parity = std::move(*parity);
      return true;
    }
    const unsigned long half = edges[i].label / 2;
    for (std::size_t c = 0; c <= class_gcd.size(); ++c) {
      const bool fresh = c == class_gcd.size();
      if (!fresh && std::gcd(class_gcd[c], half) == 1) continue;
      const unsigned long saved = fresh ? 0 : class_gcd[c];
      if (fresh) class_gcd.push_back(half);
      else class_gcd[c] = std::gcd(class_gcd[c], half);
      colour[i] = c;
      bool ok = true;
      for (std::size_t cyc : cycles_of[i]) {
        if (!cycle_ok(cyc, i, last_edge[cyc] == i)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, i + 1)) return true;
      if (fresh) class_gcd.pop_back();
      else class_gcd[c] = saved;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  out.colour = colour;
  for (auto d : class_gcd) out.primes.push_back(smallest_prime(d));
  return out;
}

GroupFlags classify_group(const LabeledGraph& g) {
  GroupFlags f;
  const auto cliques = enumerate_cliques(g);
  f.two_dimensional = true;
  f.fc_type = true;
  for (const auto& c : cliques) {
    const bool sph = is_spherical(g, c);
    if (!sph) f.fc_type = false;
    if (c.size() == 3 && sph) f.two_dimensional = false;
  }
  f.kpi1_known = f.two_dimensional || f.fc_type;
  f.even = std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.label % 2 == 0; });
  f.raag = std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.label == 2; });
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});
  f.spherical = is_spherical(g, all);
  f.odd_tree = std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.label % 2 == 1; }) &&
                g.edges().size() + 1 == g.vertex_count() && connected_components(g).size() == 1;

  unsigned long common = 0;
  for (const auto& e : g.edges()) {
    if (e.label % 2 == 0 && e.label > 2) common = std::gcd(common, static_cast<unsigned long>(e.label / 2));
  }
  if (common == 0) f.uniform_prime = 2;
  else if (common > 1) f.uniform_prime = smallest_prime(common);

  f.colouring = balanced_structure(g);
  f.balanced = f.colouring.has_value();

  // Coherence: chordal, at most one label > 2 in every 3- and 4-clique, and no
  // induced square-with-diagonal whose diagonal alone carries a label > 2.
  auto chordal = is_chordal(g);
  f.chordless_cycle = chordal.cycle;
  for (const auto& c : cliques) {
    if (c.size() < 3 || c.size() > 4) continue;
    std::size_t heavy = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) heavy += g.label(c[i], c[j]) > 2;
    }
    if (heavy > 1) {
      f.heavy_clique = c;
      break;
    }
  }
  const std::size_t n = g.vertex_count();
  for (Vertex a = 0; a < n && f.forbidden_diamond.empty(); ++a) {
    for (Vertex b = a + 1; b < n && f.forbidden_diamond.empty(); ++b) {
      if (g.adjacent(a, b)) continue;
      // a, b are the non-adjacent pair; z, w the diagonal.
      for (Vertex z = 0; z < n && f.forbidden_diamond.empty(); ++z) {
        for (Vertex w = z + 1; w < n; ++w) {
          if (z == a || z == b || w == a || w == b) continue;
          if (g.label(z, w) <= 2 || !g.adjacent(z, w)) continue;
          if (g.label(a, z) == 2 && g.label(a, w) == 2 && g.label(b, z) == 2 && g.label(b, w) == 2) {
            f.forbidden_diamond = {a, z, w, b};
            break;
          }
        }
      }
    }
  }
  f.coherent = chordal.chordal && f.heavy_clique.empty() && f.forbidden_diamond.empty();
  return f;
}

}  // namespace artin
