#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "artin/error.hpp"
#include "artin/group_ring.hpp"
#include "artin/number_theory.hpp"
#include "artin/sigma.hpp"
#include "detail/cycles.hpp"
#include "detail/witness.hpp"

namespace artin {

namespace {

// Dead edges across the cut, mapped to the odd classes of their endpoints.
struct CutGraph {
  OddClasses classes;
  std::vector<Edge> crossing;
  std::vector<MultiEdge> edges;      // one per crossing edge, on class indices
  std::vector<std::size_t> nodes;    // classes met by a crossing edge, in BFS order
};

CutGraph cut_graph(const LabeledGraph& g, const Character& chi, const Cut& cut) {
  CutGraph out{odd_classes(g), validate_cut(g, chi, cut), {}, {}};
  for (const auto& e : out.crossing) {
    auto a = out.classes.class_of[e.u], b = out.classes.class_of[e.v];
    out.edges.push_back({std::min(a, b), std::max(a, b), e.label, e.u, e.v});
  }
  std::set<std::size_t> seen;
  std::set<std::size_t> all;
  for (const auto& e : out.edges) {
    all.insert(e.a);
    all.insert(e.b);
  }
  for (std::size_t start : all) {
    if (seen.count(start)) continue;
    std::deque<std::size_t> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      out.nodes.push_back(x);
      for (const auto& e : out.edges) {
        std::size_t y;
        if (e.a == x) y = e.b;
        else if (e.b == x) y = e.a;
        else continue;
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
  }
  return out;
}

FiniteQuotient spread(const LabeledGraph& g, const OddClasses& classes, const std::vector<unsigned>& orders,
                      const std::map<std::size_t, GroupElement>& value) {
  FiniteQuotient q{orders, {}};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto it = value.find(classes.class_of[v]);
    q.phi.push_back(it == value.end() ? GroupElement(orders.size(), 0) : it->second);
  }
  return q;
}

Witness finish(const LabeledGraph& g, const Character& chi, const Cut& cut, FiniteQuotient q) {
  Witness w{cut, q, GroupElement(q.orders.size(), 1), {}};
  w.obstruction = normalized_h1_obstruction(g, chi, cut, q);
  return w;
}

// True when mu sends phi(u) + phi(v) to a nontrivial (l/2)-th root of unity.
bool edge_killed(const FiniteAbelianGroup& group, const GroupElement& mu, const GroupElement& sum, Label label) {
  const unsigned m = group.exponent();
  const unsigned e = group.character_exponent(mu, sum);
  return e != 0 && (static_cast<unsigned long>(e) * (label / 2)) % m == 0;
}

}  // namespace

namespace detail {

Cut default_cut(const LivingSubgraph& liv) {
  Cut cut;
  cut.side_one = liv.components.front();
  for (std::size_t i = 1; i < liv.components.size(); ++i) {
    cut.side_two.insert(cut.side_two.end(), liv.components[i].begin(), liv.components[i].end());
  }
  std::sort(cut.side_two.begin(), cut.side_two.end());
  return cut;
}

Witness uniform_prime_witness(const LabeledGraph& g, const Character& chi, const Cut& cut, unsigned long p) {
  validate_cut(g, chi, cut);
  FiniteQuotient q{{static_cast<unsigned>(p)}, std::vector<GroupElement>(g.vertex_count(), GroupElement{0})};
  for (Vertex v : cut.side_one) q.phi[v] = {1};
  return finish(g, chi, cut, std::move(q));
}

Witness balanced_witness(const LabeledGraph& g, const Character& chi, const Cut& cut,
                         const BalancedColouring& colouring) {
  const auto cg = cut_graph(g, chi, cut);
  const auto& core = colouring.core.edges;
  // Colour of each crossing edge through the even core.
  std::vector<std::size_t> colour;
  for (const auto& e : cg.edges) {
    auto it = std::find_if(core.begin(), core.end(), [&](const MultiEdge& c) {
      return (c.u == e.u && c.v == e.v) || (c.u == e.v && c.v == e.u);
    });
    if (it == core.end()) throw Error(ErrorCode::InvariantBreach, "dead edge missing from the even core");
    colour.push_back(colouring.colour[static_cast<std::size_t>(it - core.begin())]);
  }
  std::vector<std::size_t> used(colour.begin(), colour.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<unsigned> orders;
  for (auto c : used) orders.push_back(static_cast<unsigned>(colouring.primes[c]));
  auto factor = [&](std::size_t c) { return static_cast<std::size_t>(std::find(used.begin(), used.end(), c) - used.begin()); };

  // Signs from the colouring's parity map.
  std::vector<int> sign;
  for (const auto& e : cg.edges) {
    auto it = std::find_if(core.begin(), core.end(), [&](const MultiEdge& c) {
      return (c.u == e.u && c.v == e.v) || (c.u == e.v && c.v == e.u);
    });
    sign.push_back(colouring.parity[static_cast<std::size_t>(it - core.begin())]);
  }

  const FiniteAbelianGroup group(orders);
  std::map<std::size_t, GroupElement> value;
  for (std::size_t root : cg.nodes) {
    if (value.count(root)) continue;
    value[root] = group.identity();
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < cg.edges.size(); ++i) {
        const auto& e = cg.edges[i];
        std::size_t y;
        if (e.a == x) y = e.b;
        else if (e.b == x) y = e.a;
        else continue;
        if (value.count(y)) continue;
        GroupElement gen = group.identity();
        gen[factor(colour[i])] = 1;
        const long s = sign[i];
        value[y] = group.add(group.scale(gen, s), group.negate(value[x]));
        queue.push_back(y);
      }
    }
  }
  for (std::size_t i = 0; i < cg.edges.size(); ++i) {
    const auto& e = cg.edges[i];
    GroupElement gen = group.identity();
    gen[factor(colour[i])] = 1;
    auto sum = group.add(value[e.a], value[e.b]);
    if (sum != gen && sum != group.negate(gen)) {
      throw Error(ErrorCode::ColouringInvalidOnCut, "edge " + g.name(e.u) + "-" + g.name(e.v) +
                                                        " is not sent to a colour generator");
    }
  }
  return finish(g, chi, cut, spread(g, cg.classes, orders, value));
}

}  // namespace detail

namespace {

// Multisets of primes from `primes` with at most max_factors entries and
// product at most max_order, ordered by product and then lexicographically.
std::vector<std::vector<unsigned>> candidate_groups(const std::vector<unsigned long>& primes, WitnessBound bound) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto grow = [&](auto&& self, std::size_t from, unsigned long product) -> void {
    if (!current.empty()) out.push_back(current);
    if (current.size() == bound.max_factors) return;
    for (std::size_t i = from; i < primes.size(); ++i) {
      if (product * primes[i] > bound.max_order) continue;
      current.push_back(static_cast<unsigned>(primes[i]));
      self(self, i, product * primes[i]);
      current.pop_back();
    }
  };
  grow(grow, 0, 1);
  auto product = [](const std::vector<unsigned>& v) {
    return std::accumulate(v.begin(), v.end(), 1ul, std::multiplies<>());
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const auto pa = product(a), pb = product(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::optional<Witness> search_cut(const LabeledGraph& g, const Character& chi, const Cut& cut, WitnessBound bound) {
  const auto cg = cut_graph(g, chi, cut);
  if (cg.edges.empty()) return std::nullopt;
  std::set<unsigned long> prime_set;
  for (const auto& e : cg.edges) {
    for (auto p : prime_factors(e.label / 2)) prime_set.insert(p);
  }
  const std::vector<unsigned long> primes(prime_set.begin(), prime_set.end());
  for (const auto& orders : candidate_groups(primes, bound)) {
    const FiniteAbelianGroup group(orders);
    const GroupElement mu(orders.size(), 1);
    const auto elements = group.elements();
    std::map<std::size_t, GroupElement> value;
    std::set<std::size_t> roots;
    {
      std::set<std::size_t> reached;
      for (auto x : cg.nodes) {
        bool linked = false;
        for (const auto& e : cg.edges) {
          if ((e.a == x && reached.count(e.b)) || (e.b == x && reached.count(e.a))) linked = true;
        }
        if (!linked) roots.insert(x);
        reached.insert(x);
      }
    }
    std::optional<Witness> found;
    auto assign = [&](auto&& self, std::size_t i) -> bool {
      if (i == cg.nodes.size()) {
        auto q = spread(g, cg.classes, orders, value);
        Witness w = finish(g, chi, cut, std::move(q));
        w.character = mu;
        found = std::move(w);
        return true;
      }
      const auto x = cg.nodes[i];
      for (const auto& candidate : elements) {
        if (roots.count(x) && candidate != group.identity()) break;
        value[x] = candidate;
        bool ok = true;
        for (const auto& e : cg.edges) {
          if (e.a != x && e.b != x) continue;
          const auto other = e.a == x ? e.b : e.a;
          auto it = value.find(other);
          if (it == value.end()) continue;
          if (!edge_killed(group, mu, group.add(candidate, it->second), e.label)) {
            ok = false;
            break;
          }
        }
        if (ok && self(self, i + 1)) return true;
        value.erase(x);
      }
      return false;
    };
    if (assign(assign, 0)) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> witness_search(const LabeledGraph& g, const Character& chi, WitnessBound bound) {
  const auto liv = living_analysis(g, chi);
  if (!liv.liv0_connected || liv.liv_connected || !liv.dominant) return std::nullopt;
  const std::size_t c = liv.components.size();
  const std::size_t free_components = std::min<std::size_t>(c - 1, 10);
  // Component 0 stays on the first side; the rest are split by the mask.
  for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << free_components); ++mask) {
    Cut cut{liv.components.front(), {}};
    for (std::size_t i = 1; i < c; ++i) {
      const bool first = i - 1 < free_components && (mask & (std::uint32_t{1} << (i - 1)));
      auto& side = first ? cut.side_one : cut.side_two;
      side.insert(side.end(), liv.components[i].begin(), liv.components[i].end());
    }
    std::sort(cut.side_one.begin(), cut.side_one.end());
    std::sort(cut.side_two.begin(), cut.side_two.end());
    if (auto w = search_cut(g, chi, cut, bound)) return w;
  }
  return std::nullopt;
}

}  // namespace artin
