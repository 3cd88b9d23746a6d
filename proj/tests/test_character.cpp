#include <doctest.h>

#include <algorithm>
#include <random>

#include "artin/character.hpp"
#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "support.hpp"

using namespace artin;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvariantBreach;
}

Character scaled(const Character& chi, const Rational& t) {
  Character out = chi;
  for (auto& x : out.values) x *= t;
  return out;
}

void check_same_analysis(const LivingSubgraph& a, const LivingSubgraph& b) {
  CHECK(a.living == b.living);
  CHECK(a.dead == b.dead);
  CHECK(a.dead_edges == b.dead_edges);
  CHECK(a.living_edges == b.living_edges);
  CHECK(a.components == b.components);
  CHECK(a.liv_connected == b.liv_connected);
  CHECK(a.liv0_connected == b.liv0_connected);
  CHECK(a.dominant == b.dominant);
  REQUIRE(a.three_dead.size() == b.three_dead.size());
  for (std::size_t i = 0; i < a.three_dead.size(); ++i) CHECK(a.three_dead[i].edge == b.three_dead[i].edge);
}

LabeledGraph b3_triangle() {
  // a -4- b -3- c, a -2- c
  return LabeledGraph({"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", 3}, {"a", "c", 2}});
}

}  // namespace

TEST_CASE("character helpers") {
  Character chi{{Rational(2, 3), Rational(-4, 3), 0}};
  CHECK_FALSE(chi.is_discrete());
  CHECK(chi.primitive() == std::vector<long>{1, -2, 0});
  CHECK(chi.negated().values[0] == Rational(-2, 3));
  CHECK(make_character({4, 6}).primitive() == std::vector<long>{2, 3});
  CHECK(make_character({0, 0}).is_zero());
}

TEST_CASE("character validation") {
  LabeledGraph i23({"a", "b"}, {{"a", "b", 3}});
  CHECK(code_of([&] { validate_character(i23, make_character({1, 2})); }) == ErrorCode::OddEdgeMismatch);
  CHECK_NOTHROW(validate_character(i23, make_character({2, 2})));
  LabeledGraph i24({"a", "b"}, {{"a", "b", 4}});
  CHECK_NOTHROW(validate_character(i24, make_character({1, -1})));
  CHECK(code_of([&] { validate_character(i24, make_character({0, 0})); }) == ErrorCode::ZeroCharacter);
  // a1 = a2 = a3 = a, b1 = b2 = b, c1 = c.
  CHECK_NOTHROW(validate_character(support::coherent_example(), make_character({1, 1, 1, 1, 1, 1})));
  CHECK(code_of([&] { validate_character(support::coherent_example(), make_character({1, 1, 1, 1, 2, 1})); }) ==
        ErrorCode::OddEdgeMismatch);
}

TEST_CASE("living analysis examples") {
  LabeledGraph square(4, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {0, 3, 2}});
  auto a = living_analysis(square, make_character({1, 0, 1, 0}));
  CHECK(a.living == std::vector<Vertex>{0, 2});
  CHECK_FALSE(a.liv0_connected);
  CHECK(a.dominant);

  LabeledGraph i24({"a", "b"}, {{"a", "b", 4}});
  auto b = living_analysis(i24, make_character({1, -1}));
  CHECK(b.living.size() == 2);
  CHECK(b.dead_edges.size() == 1);
  CHECK(b.liv0_connected);
  CHECK_FALSE(b.liv_connected);
  CHECK(b.is_dead_edge(0, 1));

  auto g = support::square_example();
  auto c = living_analysis(g, make_character({0, 0, 1, 1}));
  CHECK(c.dead == std::vector<Vertex>{0, 1});
  CHECK(c.dead_edges.empty());
  CHECK(c.liv_connected);
  CHECK(c.dominant);

  // A dead vertex with no living neighbour is undominated.
  LabeledGraph path(3, {{0, 1, 2}, {1, 2, 2}});
  auto d = living_analysis(path, make_character({1, 0, 0}));
  CHECK_FALSE(d.dominant);
  CHECK(d.undominated == std::vector<Vertex>{2});
}

TEST_CASE("three-dead edges") {
  auto g = b3_triangle();
  auto dead = living_analysis(g, make_character({2, -1, -1}));
  REQUIRE(dead.three_dead.size() == 1);
  CHECK(dead.three_dead[0].end == 0);
  CHECK(dead.three_dead[0].middle == 1);
  CHECK(dead.three_dead[0].third == 2);
  CHECK(dead.is_three_dead(0, 1));
  CHECK(living_analysis(g, make_character({1, 1, 1})).three_dead.empty());
  // The other orientation of the equation is not 3-dead.
  CHECK(living_analysis(g, make_character({-2, 1, 1})).three_dead.size() == 1);
  CHECK(living_analysis(g, make_character({1, -2, -2})).three_dead.empty());
}

TEST_CASE("living analysis properties") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = support::random_graph(rng, 1 + rng() % 6, 0.5, {2, 3, 4, 5, 6});
    auto raw = support::random_character(rng, g, 2);
    auto chi = make_character(raw);
    auto base = living_analysis(g, chi);
    const Rational t(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 4));
    check_same_analysis(base, living_analysis(g, scaled(chi, t)));
    check_same_analysis(base, living_analysis(g, chi.negated()));
    for (const auto& e : base.dead_edges) {
      CHECK(base.is_living(e.u));
      CHECK(base.is_living(e.v));
      CHECK(e.label % 2 == 0);
      CHECK(e.label >= 4);
    }
    // Living and dead edges partition the edges of Liv_0.
    std::size_t liv0_edges = 0;
    for (const auto& e : g.edges()) {
      if (base.is_living(e.u) && base.is_living(e.v)) ++liv0_edges;
    }
    CHECK(base.living_edges.size() + base.dead_edges.size() == liv0_edges);
    for (const auto& e : base.three_dead) CHECK(e.edge.label == 4);
  }
}

TEST_CASE("spherical link examples") {
  LabeledGraph star(3, {{0, 1, 2}, {0, 2, 2}});
  auto a = spherical_link(star, make_character({0, 1, 1}), 0);
  CHECK(a.vertices == std::vector<Vertex>{1, 2});
  CHECK(a.cells.size() == 2);
  CHECK_FALSE(a.connected());

  LabeledGraph triangle(3, {{0, 1, 2}, {0, 2, 2}, {1, 2, 2}});
  auto b = spherical_link(triangle, make_character({0, 1, 1}), 0);
  CHECK(b.cells.size() == 3);
  CHECK(b.connected());

  auto g = support::square_example();
  auto c = spherical_link(g, make_character({0, 0, 1, 1}), 0);
  CHECK(c.vertices == std::vector<Vertex>{2, 3});
  CHECK(c.cells.size() == 2);
  CHECK_FALSE(c.connected());

  LabeledGraph lonely(2, {});
  CHECK(spherical_link(lonely, make_character({0, 1}), 0).empty());
}

TEST_CASE("spherical link cells are downward closed") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = support::random_graph(rng, 2 + rng() % 5, 0.6, {2, 2, 3, 4, 5});
    auto chi = make_character(support::random_character(rng, g, 1));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto link = spherical_link(g, chi, v);
      for (const auto& cell : link.cells) {
        auto with_v = cell;
        with_v.push_back(v);
        CHECK(is_spherical(g, cell));
        CHECK(is_spherical(g, with_v));
        for (std::size_t drop = 0; cell.size() > 1 && drop < cell.size(); ++drop) {
          auto sub = cell;
          sub.erase(sub.begin() + static_cast<long>(drop));
          CHECK(std::find(link.cells.begin(), link.cells.end(), sub) != link.cells.end());
        }
      }
    }
  }
}

TEST_CASE("reduction moves") {
  auto g = support::square_example();
  auto chi2 = make_character({0, 0, 1, 1});
  auto deleted = reduce(g, chi2, DeleteDeadVertex{0});
  CHECK(deleted.graph.vertex_count() == 3);
  CHECK(deleted.graph.names() == std::vector<std::string>{"a2", "a3", "a4"});
  CHECK(code_of([&] { reduce(g, chi2, DeleteDeadVertex{2}); }) == ErrorCode::MovePreconditionViolated);

  auto relabel = reduce(g, chi2, ReduceLabel{1, 2, 2});
  CHECK(relabel.graph.label(1, 2) == 2);
  CHECK(code_of([&] { reduce(g, chi2, ReduceLabel{1, 2, 4}); }) == ErrorCode::MovePreconditionViolated);
  // An odd divisor needs equal values at the ends.
  CHECK(code_of([&] { reduce(g, make_character({1, 2, 1, 1}), ReduceLabel{1, 2, 3}); }) ==
        ErrorCode::MovePreconditionViolated);
  CHECK(reduce(g, make_character({1, 1, 1, 1}), ReduceLabel{1, 2, 3}).graph.label(1, 2) == 3);

  auto added = reduce(g, chi2, AddEvenEdge{1, 3, 2});
  CHECK(added.graph.edges().size() == g.edges().size() + 1);
  CHECK(code_of([&] { reduce(g, chi2, AddEvenEdge{1, 3, 3}); }) == ErrorCode::MovePreconditionViolated);
  CHECK(code_of([&] { reduce(g, chi2, AddEqualEdge{1, 3, 3}); }) == ErrorCode::MovePreconditionViolated);
  CHECK(reduce(g, make_character({1, 1, 1, 1}), AddEqualEdge{1, 3, 3}).graph.label(1, 3) == 3);
}

TEST_CASE("identification merges labels by gcd") {
  LabeledGraph g({"a", "b", "c"}, {{"a", "c", 4}, {"b", "c", 6}});
  auto merged = reduce(g, make_character({1, 1, 2}), IdentifyVertices{0, 1});
  CHECK(merged.graph.vertex_count() == 2);
  CHECK(merged.graph.label(0, 1) == 2);
  CHECK(merged.chi.values == std::vector<Rational>{1, 2});

  // gcd 1 forces a further identification.
  LabeledGraph h({"a", "b", "c"}, {{"a", "c", 4}, {"b", "c", 3}});
  auto collapsed = reduce(h, make_character({1, 1, 1}), IdentifyVertices{0, 1});
  CHECK(collapsed.graph.vertex_count() == 1);
  CHECK(code_of([&] { reduce(g, make_character({1, 2, 2}), IdentifyVertices{0, 1}); }) ==
        ErrorCode::MovePreconditionViolated);
}

TEST_CASE("moves compose and deletion shrinks the graph") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = support::random_graph(rng, 3 + rng() % 4, 0.5, {2, 4, 6});
    auto raw = support::random_character(rng, g, 1);
    if (std::count(raw.begin(), raw.end(), 0) == 0) raw[0] = 0;
    if (std::all_of(raw.begin(), raw.end(), [](long x) { return x == 0; })) continue;
    auto chi = make_character(raw);
    Reduction current{g, chi, ""};
    while (true) {
      std::optional<Vertex> dead;
      for (Vertex v = 0; v < current.graph.vertex_count(); ++v) {
        if (current.chi[v] == 0) dead = v;
      }
      if (!dead) break;
      auto next = reduce(current.graph, current.chi, DeleteDeadVertex{*dead});
      CHECK(next.graph.vertex_count() + 1 == current.graph.vertex_count());
      current = next;
    }
    CHECK(current.graph.vertex_count() == static_cast<std::size_t>(std::count_if(raw.begin(), raw.end(), [](long x) {
            return x != 0;
          })));
  }
}

TEST_CASE("quotient validation") {
  LabeledGraph pair(2, {});
  auto c2 = validate_quotient(pair, make_character({1, 1}), FiniteQuotient{{2}, {{1}, {0}}});
  CHECK(c2.psi_surjective);
  CHECK(c2.phi_restricted_surjective);
  auto trivial = validate_quotient(pair, make_character({2, 3}), FiniteQuotient{{}, {{}, {}}});
  CHECK(trivial.psi_surjective);
  CHECK_FALSE(validate_quotient(pair, make_character({2, 4}), FiniteQuotient{{}, {{}, {}}}).psi_surjective);
  auto constant = validate_quotient(pair, make_character({1, 1}), FiniteQuotient{{2}, {{1}, {1}}});
  CHECK_FALSE(constant.psi_surjective);
  CHECK_FALSE(constant.phi_restricted_surjective);

  CHECK(code_of([&] { validate_quotient(pair, make_character({1, 1}), FiniteQuotient{{2}, {{2}, {0}}}); }) ==
        ErrorCode::BadResidue);
  LabeledGraph odd(2, {{0, 1, 3}});
  CHECK(code_of([&] { validate_quotient(odd, make_character({1, 1}), FiniteQuotient{{2}, {{1}, {0}}}); }) ==
        ErrorCode::OddEdgeMismatch);
  Character half{{Rational(1, 2), Rational(1, 2)}};
  CHECK(code_of([&] { validate_quotient(pair, half, FiniteQuotient{{2}, {{1}, {0}}}); }) ==
        ErrorCode::NonDiscreteCharacter);
}
