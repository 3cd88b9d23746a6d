// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "artin/chain.hpp"
#include "artin/group_ring.hpp"
#include "artin/number_theory.hpp"
#include "artin/sigma.hpp"
#include "detail/witness.hpp"
#include "formulas.hpp"
#include "support.hpp"

using namespace artin;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::string show(const std::vector<long>& chi) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < chi.size(); ++i) out << (i ? "," : "") << chi[i];
  out << ")";
  return out.str();
}

LabeledGraph triangle(Label ab, Label bc, Label ca) {
  return LabeledGraph({"a", "b", "c"}, {{"a", "b", ab}, {"b", "c", bc}, {"a", "c", ca}});
}

// Q together with F_p for every prime p dividing some l(e) or l(e)/2.
std::vector<FieldSpec> label_field_menu(const LabeledGraph& g) {
  std::set<unsigned long> primes;
  for (const auto& e : g.edges()) {
    for (auto p : prime_factors(e.label)) primes.insert(p);
    if (e.label % 2 == 0 && e.label > 2) {
      for (auto p : prime_factors(e.label / 2)) primes.insert(p);
    }
  }
  std::vector<FieldSpec> out{{0}};
  for (auto p : primes) out.push_back({p});
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Outcome criterion1() {
  Outcome o;
  const auto g = support::coherent_example();
  std::mt19937 rng(101);
  std::uniform_int_distribution<long> value(-3, 3);
  std::size_t tested = 0;
  while (tested < 20) {
    const long a = value(rng), b = value(rng), c = value(rng);
    if (a == 0 || b == 0 || c + b == 0 || a + b == 0) continue;
    ++tested;
    const std::vector<long> chi{a, a, a, b, b, c};
    const auto s2 = sigma2_decide(g, make_character(chi));
    const auto fib = fibring_report(g, make_character(chi));
    if (s2.homotopical.verdict != Verdict::Yes) o.fail(show(chi) + " sigma2 " + std::string(to_string(s2.homotopical.verdict)));
    if (fib.finitely_presented != Verdict::Yes || !starts_with(fib.summary, "kernel finitely presented")) {
      o.fail(show(chi) + " fibring '" + fib.summary + "'");
    }
  }
  o.detail = std::to_string(tested) + " characters";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto g = support::square_example();
  for (long x : {1L, -1L}) {
    const std::vector<long> chi1{x, x, 0, 0};
    const auto c1 = make_character(chi1);
    const auto s1 = sigma1_decide(g, c1);
    const auto s2 = sigma2_decide(g, c1);
    const auto fib = fibring_report(g, c1);
    if (s1.verdict != Verdict::Yes) o.fail("chi1 " + show(chi1) + " sigma1 " + std::string(to_string(s1.verdict)));
    if (s2.homotopical.verdict != Verdict::No) o.fail("chi1 " + show(chi1) + " sigma2 " + std::string(to_string(s2.homotopical.verdict)));
    if (fib.summary != "kernel finitely generated but not finitely presented") o.fail("chi1 " + show(chi1) + " '" + fib.summary + "'");

    const std::vector<long> chi2{0, 0, x, x};
    const auto c2 = make_character(chi2);
    const auto t1 = sigma1_decide(g, c2);
    const auto fib2 = fibring_report(g, c2);
    if (t1.verdict != Verdict::No) {
      o.fail("chi2 " + show(chi2) + " sigma1 " + std::string(to_string(t1.verdict)) + " (" + t1.summary + ")");
    }
    if (fib2.summary != "kernel not finitely generated") o.fail("chi2 " + show(chi2) + " '" + fib2.summary + "'");
  }
  o.detail = "chi1 and chi2 with both signs";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t compared = 0;
  auto check = [&](const LabeledGraph& g, const std::vector<long>& chi, std::size_t k, const formulas::Column& expected,
                   const std::string& name) {
    const auto cells = salvetti_cells(g);
    const auto c = build_salvetti_complex(cells, chi, RationalField{});
    ++compared;
    if (!formulas::same(formulas::column(cells, c, k, 0), expected)) o.fail(name + " " + show(chi));
  };
  for (long k = 1; k <= 4; ++k) {
    const auto g = triangle(2, static_cast<Label>(2 * k), 2);
    for (long x = -3; x <= 3; ++x) {
      for (long y = -3; y <= 3; ++y) {
        for (long z = -3; z <= 3; ++z) {
          check(g, {x, y, z}, 3, formulas::right_angled_triangle(k, x, y, z), "A(2," + std::to_string(2 * k) + ",2)");
        }
      }
    }
  }
  const auto b3 = triangle(4, 3, 2);
  for (long x = -3; x <= 3; ++x) {
    for (long y = -3; y <= 3; ++y) check(b3, {x, y, y}, 3, formulas::b3_triangle(x, y), "A(4,3,2)");
  }
  for (Label l = 2; l <= 8; ++l) {
    const LabeledGraph g(2, {{0, 1, l}});
    for (long x = -3; x <= 3; ++x) {
      for (long y = -3; y <= 3; ++y) {
        if (l % 2 == 1 && x != y) continue;
        check(g, {x, y}, 2, formulas::edge(0, 1, l, x, y), "edge " + std::to_string(l));
      }
    }
  }
  o.detail = std::to_string(compared) + " boundary columns";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937 rng(103);
  std::size_t triangles = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = support::random_graph(rng, 1 + rng() % 6, 0.6, {2, 3, 4, 5, 6});
    const auto chi = support::random_character(rng, g, 3);
    const auto cells = salvetti_cells(g);
    triangles += cells.count(3);
    if (!boundary_check(build_salvetti_complex(cells, chi, RationalField{}))) o.fail("trial " + std::to_string(trial));
  }
  o.detail = "200 graphs, " + std::to_string(triangles) + " spherical triangles";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937 rng(107);
  std::size_t pairs = 0, yes = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = support::random_graph(rng, 1 + rng() % 6, 0.5, {2});
    for (int k = 0; k < 5; ++k) {
      const auto values = support::random_character(rng, g, 2);
      const auto chi = make_character(values);
      const bool decided = sigma1_decide(g, chi).verdict == Verdict::Yes;
      const auto liv = living_analysis(g, chi);
      const bool graph_rule = liv.liv0_connected && liv.dominant;
      const bool finite = kernel_homology_report(g, chi, {FieldSpec{0}}).entries[0].groups[1].finite_dimensional();
      ++pairs;
      yes += decided;
      if (decided != graph_rule || graph_rule != finite) {
        o.fail("graph " + std::to_string(trial) + " chi " + show(values));
      }
    }
  }
  o.detail = std::to_string(pairs) + " pairs, " + std::to_string(yes) + " in Sigma^1";
  return o;
}

std::vector<LabeledGraph> two_dimensional_list() {
  return {
      support::square_example(),
      triangle(3, 3, 3),
      triangle(2, 3, 6),
      triangle(4, 4, 6),
      LabeledGraph({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 5}}),
      LabeledGraph({"a", "b", "c", "d"}, {{"a", "b", 4}, {"b", "c", 6}, {"c", "d", 2}}),
      LabeledGraph({"o", "a", "b", "c"}, {{"o", "a", 4}, {"o", "b", 3}, {"o", "c", 6}}),
      LabeledGraph({"a", "b", "c", "d", "e"}, {{"a", "b", 2}, {"b", "c", 3}, {"c", "d", 4}, {"d", "e", 2}}),
      LabeledGraph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"a", "d", 2}}),
      LabeledGraph({"a", "b", "c", "d"}, {{"a", "b", 4}, {"b", "c", 4}, {"a", "c", 6}, {"a", "d", 2}}),
  };
}

Outcome criterion6() {
  Outcome o;
  std::size_t classes = 0, yes = 0;
  const auto graphs = two_dimensional_list();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    if (!classify_group(g).two_dimensional) {
      o.fail("graph " + std::to_string(i) + " is not 2-dimensional");
      continue;
    }
    const auto menu = label_field_menu(g);
    const auto cells = salvetti_cells(g);
    for (const auto& values : enumerate_characters(g, 2)) {
      const auto chi = make_character(values);
      const bool in_sigma2 = sigma2_decide(g, chi).homotopical.verdict == Verdict::Yes;
      const bool h2_finite = kernel_homology_report(g, cells, chi, menu).infinite_in_degree(2) == nullptr;
      ++classes;
      yes += in_sigma2;
      if (in_sigma2 != h2_finite) o.fail("graph " + std::to_string(i) + " chi " + show(values));
    }
  }
  o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(classes) + " classes, " +
             std::to_string(yes) + " in Sigma^2";
  return o;
}

// Trees on n <= 5 vertices up to isomorphism, as edge lists.
std::vector<std::vector<std::pair<Vertex, Vertex>>> tree_shapes() {
  return {
      {{0, 1}},
      {{0, 1}, {1, 2}},
      {{0, 1}, {1, 2}, {2, 3}},
      {{0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}},
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}},
      {{0, 1}, {1, 2}, {2, 3}, {1, 4}},
  };
}

Outcome criterion7() {
  Outcome o;
  std::size_t odd_trees = 0, even_trees = 0;
  DecideOptions options;
  for (const auto& shape : tree_shapes()) {
    const std::size_t n = shape.size() + 1;
    const std::vector<Label> labels = n <= 4 ? std::vector<Label>{2, 3, 4, 5, 6} : std::vector<Label>{2, 3, 4};
    std::vector<std::size_t> pick(shape.size(), 0);
    while (true) {
      std::vector<Edge> edges;
      bool odd = true;
      std::string name;
      for (std::size_t i = 0; i < shape.size(); ++i) {
        const Label l = labels[pick[i]];
        odd = odd && l % 2 == 1;
        edges.push_back({shape[i].first, shape[i].second, l});
        name += std::to_string(shape[i].first) + "-" + std::to_string(shape[i].second) + ":" + std::to_string(l) + " ";
      }
      const LabeledGraph g(n, edges);
      bool all_in = true;
      for (const auto& entry : scan(g, 2, options)) all_in = all_in && entry.sigma2.homotopical.verdict == Verdict::Yes;
      if (odd) {
        ++odd_trees;
        if (!all_in) o.fail("odd tree " + name + "has a rejected class");
      } else {
        ++even_trees;
        if (all_in) o.fail("tree " + name + "with an even label has no rejected class");
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == labels.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  o.detail = std::to_string(odd_trees) + " odd trees, " + std::to_string(even_trees) + " trees with even labels";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(109);
  const std::vector<std::vector<unsigned>> groups{{2}, {3}, {4}, {5}, {6}, {2, 2}, {2, 3}};
  std::size_t proper = 0, instances = 0, characters = 0;
  while (instances < 20) {
    const std::size_t s1 = 1 + rng() % 3, s2 = 1 + rng() % (6 - s1 > 3 ? 3 : 6 - s1);
    const std::size_t n = s1 + s2;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if ((u < s1) == (v < s1)) edges.push_back({u, v, rng() % 2 ? Label{3} : Label{2}});
      }
    }
    std::set<std::pair<Vertex, Vertex>> joins;
    const std::size_t join_count = std::min<std::size_t>(1 + rng() % 2, s1 * s2);
    while (joins.size() < join_count) joins.insert({static_cast<Vertex>(rng() % s1), static_cast<Vertex>(s1 + rng() % s2)});
    const std::vector<Label> even{4, 6, 8, 10, 12};
    for (auto [u, v] : joins) edges.push_back({u, v, even[rng() % even.size()]});
    const LabeledGraph g(n, edges);
    std::vector<long> values(n);
    for (Vertex v = 0; v < n; ++v) values[v] = v < s1 ? 1 : -1;
    const auto chi = make_character(values);

    const auto& orders = groups[rng() % groups.size()];
    const auto classes = odd_classes(g);
    std::vector<std::vector<unsigned>> phi(n, std::vector<unsigned>(orders.size()));
    for (const auto& members : classes.members) {
      std::vector<unsigned> residue;
      for (unsigned m : orders) residue.push_back(static_cast<unsigned>(rng() % m));
      for (Vertex v : members) phi[v] = residue;
    }
    const FiniteQuotient q{orders, phi};
    Cut cut;
    for (Vertex v = 0; v < n; ++v) (v < s1 ? cut.side_one : cut.side_two).push_back(v);
    const auto gens = normalized_h1_obstruction(g, chi, cut, q);
    const FiniteAbelianGroup group(orders);
    const bool ideal_proper = ideal_properness(group, gens).proper;

    const auto report = kernel_homology_report(g, chi, Twist{q, {}});
    const CyclotomicField field(group.exponent());
    bool twisted_infinite = false;
    for (const auto& entry : report.entries) {
      const bool infinite = entry.groups[1].free_rank >= 1;
      twisted_infinite = twisted_infinite || infinite;
      bool killed = true;
      for (const auto& x : gens) killed = killed && field.is_zero(evaluate_character(group, field, *entry.character, x));
      ++characters;
      if (killed != infinite) o.fail("instance " + std::to_string(instances) + " character mismatch");
    }
    if (ideal_proper != twisted_infinite) o.fail("instance " + std::to_string(instances));
    proper += ideal_proper;
    ++instances;
  }
  o.detail = std::to_string(instances) + " instances (" + std::to_string(proper) + " proper), " +
             std::to_string(characters) + " characters";
  return o;
}

bool postcondition(const LabeledGraph& g, const Character& chi, const Witness& w, const BalancedColouring& colouring) {
  const auto& q = w.quotient;
  for (const auto& e : validate_cut(g, chi, w.cut)) {
    std::optional<std::size_t> core_edge;
    for (std::size_t i = 0; i < colouring.core.edges.size(); ++i) {
      const auto& me = colouring.core.edges[i];
      if ((me.u == e.u && me.v == e.v) || (me.u == e.v && me.v == e.u)) core_edge = i;
    }
    if (!core_edge) return false;
    const unsigned long p = colouring.primes[colouring.colour[*core_edge]];
    std::size_t nonzero = 0;
    for (std::size_t f = 0; f < q.orders.size(); ++f) {
      const unsigned s = (q.phi[e.u][f] + q.phi[e.v][f]) % q.orders[f];
      if (s == 0) continue;
      ++nonzero;
      if (q.orders[f] != p || (s != 1 && s != q.orders[f] - 1)) return false;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

Outcome criterion9() {
  Outcome o;
  auto run = [&](const LabeledGraph& g, const std::vector<long>& values, const std::optional<Cut>& cut,
                 const std::string& name) {
    const auto chi = make_character(values);
    const auto colouring = balanced_structure(g);
    if (!colouring) return o.fail(name + " not balanced");
    const auto liv = living_analysis(g, chi);
    const auto w = detail::balanced_witness(g, chi, cut ? *cut : detail::default_cut(liv), *colouring);
    if (!postcondition(g, chi, w, *colouring)) o.fail(name + " postcondition");
    const auto d = sigma1_decide(g, chi);
    const auto* cert = std::get_if<WitnessCertificate>(&d.certificate);
    if (d.verdict != Verdict::No || d.provenance != Provenance::BalancedColouring || !cert) {
      return o.fail(name + " sigma1 " + std::string(to_string(d.verdict)) + " via " + std::string(to_string(d.provenance)));
    }
    if (!postcondition(g, chi, cert->witness, *colouring)) o.fail(name + " certificate postcondition");
    if (cert->twisted_h1_free_rank == 0) o.fail(name + " twisted rank zero");
  };
  run(LabeledGraph(4, {{0, 1, 4}, {1, 2, 6}, {2, 3, 4}, {0, 3, 6}}), {1, -1, 1, -1}, Cut{{0, 2}, {1, 3}},
      "alternating cycle");
  std::mt19937 rng(113);
  std::size_t built = 0;
  for (int trial = 0; trial < 20000 && built < 10; ++trial) {
    const auto g = support::random_graph(rng, 3 + rng() % 3, 0.7, {2, 3, 4, 6, 10});
    if (!balanced_structure(g)) continue;
    const auto values = support::random_character(rng, g, 2);
    const auto liv = living_analysis(g, make_character(values));
    if (liv.liv_connected || !liv.liv0_connected || !liv.dominant) continue;
    run(g, values, std::nullopt, "random " + std::to_string(trial) + " " + show(values));
    ++built;
  }
  if (built < 10) o.fail("only " + std::to_string(built) + " random instances");
  o.detail = "alternating cycle and " + std::to_string(built) + " random instances";
  return o;
}

// Integer polynomial arithmetic for the cyclotomic oracle, low degree first.
std::vector<long> divide_exact(std::vector<long> a, const std::vector<long>& b) {
  std::vector<long> q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  return q;
}

std::vector<long> cyclotomic(unsigned n) {
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic(d));
  }
  return p;
}

bool trial_division_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Outcome criterion10() {
  Outcome o;
  for (unsigned n = 1; n <= 50; ++n) {
    const auto [p, r] = prime_with_root(n);
    const auto phi = cyclotomic(n);
    long long value = 0, power = 1;
    const long long mod = static_cast<long long>(p);
    for (long c : phi) {
      value = ((value + (c % mod + mod) % mod * power) % mod + mod) % mod;
      power = power * static_cast<long long>(r) % mod;
    }
    if (!trial_division_prime(p) || p % n != 1 % n || value != 0) o.fail("n=" + std::to_string(n));
  }
  o.detail = "n = 1..50";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 six-vertex example characters are in Sigma^2", criterion1},
      {"2 square example characters", criterion2},
      {"3 closed boundary formulas", criterion3},
      {"4 boundary squares to zero", criterion4},
      {"5 right-angled ground truth", criterion5},
      {"6 two-dimensional completeness", criterion6},
      {"7 trees", criterion7},
      {"8 ideal properness and twisted homology", criterion8},
      {"9 balanced homomorphisms", criterion9},
      {"10 primes with roots of unity", criterion10},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("%s C%s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), seconds);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
