#include <doctest.h>

#include <random>

#include "artin/chain.hpp"
#include "formulas.hpp"
#include "support.hpp"

using namespace artin;
using formulas::mono;
using formulas::one_minus;
using formulas::one_plus;

namespace {

ChainComplex<RationalField> rational_complex(const LabeledGraph& g, const std::vector<long>& chi) {
  return build_salvetti_complex(salvetti_cells(g), chi, RationalField{});
}

std::size_t index_of(const SalvettiCells& cells, std::size_t k, const std::vector<Vertex>& cell) {
  const auto& list = cells.cells[k];
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), cell) - list.begin());
}

LabeledGraph triangle(Label ab, Label bc, Label ca) {
  return LabeledGraph({"a", "b", "c"}, {{"a", "b", ab}, {"b", "c", bc}, {"a", "c", ca}});
}

const std::vector<FieldSpec> kQandF2{{0}, {2}};

}  // namespace

TEST_CASE("cells") {
  auto cells = salvetti_cells(support::square_example());
  CHECK(cells.count(0) == 1);
  CHECK(cells.count(1) == 4);
  CHECK(cells.count(2) == 5);
  CHECK(cells.count(3) == 0);  // both triangles are non-spherical
  auto b3 = salvetti_cells(triangle(4, 3, 2));
  CHECK(b3.count(3) == 1);
}

TEST_CASE("vertex boundary") {
  auto c = rational_complex(LabeledGraph(1, {}), {1});
  REQUIRE(c.boundary[1].rows() == 1);
  CHECK(c.boundary[1](0, 0) == one_minus(1));
}

TEST_CASE("dead 4-edge boundary") {
  LabeledGraph g(2, {{0, 1, 4}});
  auto c = rational_complex(g, {1, -1});
  CHECK(c.boundary[2](1, 0) == mono(2, 0) - mono(2, 1));
  CHECK(c.boundary[2](0, 0) == -(mono(2, 0) - mono(2, -1)));
}

TEST_CASE("B3 triangle boundary") {
  auto g = triangle(4, 3, 2);
  auto cells = salvetti_cells(g);
  auto c = build_salvetti_complex(cells, {1, 1, 1}, RationalField{});
  const auto bc = index_of(cells, 2, {1, 2});
  CHECK(c.boundary[3](bc, 0) == one_minus(1) * one_plus(2) * one_minus(3));
  CHECK(formulas::same(formulas::column(cells, c, 3, 0), formulas::b3_triangle(1, 1)));
}

TEST_CASE("misprinted B3 column breaks the chain condition") {
  auto g = triangle(4, 3, 2);
  auto cells = salvetti_cells(g);
  LaurentRing<RationalField> ring{RationalField{}};
  for (auto [x, y] : std::vector<std::pair<long, long>>{{1, 2}, {3, 1}, {2, 2}}) {
    auto c = build_salvetti_complex(cells, {x, y, y}, RationalField{});
    for (bool printed : {false, true}) {
      Matrix<formulas::Poly> column(cells.count(2), 1, formulas::Poly(RationalField{}));
      for (const auto& [face, entry] : formulas::b3_triangle(x, y, printed)) column(index_of(cells, 2, face), 0) = entry;
      auto product = multiply(ring, c.boundary[2], column);
      bool zero = true;
      for (std::size_t i = 0; i < product.rows(); ++i) zero = zero && product(i, 0).is_zero();
      CHECK(zero == (!printed || x == y));
    }
  }
}

TEST_CASE("closed formulas agree with enumeration") {
  for (Label l = 2; l <= 8; ++l) {
    LabeledGraph g(2, {{0, 1, l}});
    auto cells = salvetti_cells(g);
    for (long x = -3; x <= 3; ++x) {
      for (long y = -3; y <= 3; ++y) {
        if (l % 2 == 1 && x != y) continue;
        auto c = build_salvetti_complex(cells, {x, y}, RationalField{});
        CHECK(formulas::same(formulas::column(cells, c, 2, 0), formulas::edge(0, 1, l, x, y)));
      }
    }
  }
  for (long k = 1; k <= 3; ++k) {
    auto g = triangle(2, static_cast<Label>(2 * k), 2);
    auto cells = salvetti_cells(g);
    for (long x = -2; x <= 2; ++x) {
      for (long y = -2; y <= 2; ++y) {
        for (long z = -2; z <= 2; ++z) {
          auto c = build_salvetti_complex(cells, {x, y, z}, RationalField{});
          CHECK(formulas::same(formulas::column(cells, c, 3, 0), formulas::right_angled_triangle(k, x, y, z)));
        }
      }
    }
  }
}

TEST_CASE("boundary squares to zero") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = support::random_graph(rng, 2 + rng() % 4, 0.7, {2, 3, 4, 5, 6});
    auto chi = support::random_character(rng, g, 3);
    auto cells = salvetti_cells(g);
    CHECK(boundary_check(build_salvetti_complex(cells, chi, RationalField{})));
    CHECK(boundary_check(build_salvetti_complex(cells, chi, PrimeField(3))));
  }
  CHECK(boundary_check(rational_complex(support::coherent_example(), {1, 1, 1, 1, 1, 1})));
}

TEST_CASE("a corrupted boundary is detected") {
  auto c = rational_complex(triangle(4, 3, 2), {1, 1, 1});
  REQUIRE(boundary_check(c));
  c.boundary[3](0, 0) += mono(1, 5);
  CHECK_FALSE(boundary_check(c));
}

TEST_CASE("homology examples") {
  LabeledGraph point(1, {});
  auto h = homology(rational_complex(point, {1}));
  CHECK(h[0].free_rank == 0);
  CHECK(h[0].dimension() == 1);
  REQUIRE(h[0].torsion.size() == 1);
  CHECK(h[0].torsion[0].polynomial == "-1 + t");
  CHECK(h[1].free_rank == 0);
  CHECK(h[1].torsion.empty());

  LabeledGraph pair(2, {});
  CHECK(homology(rational_complex(pair, {1, 1}))[1].free_rank == 1);

  LabeledGraph i24(2, {{0, 1, 4}});
  auto f2 = kernel_homology_report(i24, make_character({1, -1}), {FieldSpec{2}});
  CHECK(f2.entries[0].groups[1].free_rank >= 1);
  auto q = kernel_homology_report(i24, make_character({1, -1}), {FieldSpec{0}});
  CHECK(q.entries[0].groups[1].free_rank == 0);

  LabeledGraph odd_path(2, {{0, 1, 3}});
  for (const auto& entry : kernel_homology_report(odd_path, make_character({1, 1}), kQandF2).entries) {
    CHECK(entry.groups[0].finite_dimensional());
    CHECK(entry.groups[1].finite_dimensional());
  }
}

TEST_CASE("square example kernels") {
  auto g = support::square_example();
  auto first = kernel_homology_report(g, make_character({1, 1, 0, 0}), default_field_menu(g));
  CHECK(first.infinite_in_degree(2) != nullptr);
  CHECK(first.infinite_in_degree(1) == nullptr);
  // The second character has Liv connected and dominant, so H_1 stays finite.
  auto second = kernel_homology_report(g, make_character({0, 0, 1, 1}), default_field_menu(g));
  CHECK(second.infinite_in_degree(1) == nullptr);
}

TEST_CASE("field menu") {
  auto menu = default_field_menu(support::square_example());
  std::vector<std::string> names;
  for (const auto& f : menu) names.push_back(f.name());
  CHECK(names == std::vector<std::string>{"Q", "F2", "F3"});
  CHECK(parse_field("F5") == FieldSpec{5});
  CHECK(parse_field("Q") == FieldSpec{0});
  CHECK_THROWS_AS(parse_field("F4"), Error);
}

TEST_CASE("trivial twist matches plain coefficients") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = support::random_graph(rng, 2 + rng() % 4, 0.6, {2, 3, 4, 6});
    auto chi = make_character(support::random_character(rng, g, 2));
    FiniteQuotient trivial{{1}, std::vector<std::vector<unsigned>>(g.vertex_count(), {0})};
    auto twisted = kernel_homology_report(g, chi, Twist{trivial, {}});
    auto plain = kernel_homology_report(g, chi, {FieldSpec{0}});
    REQUIRE(twisted.entries.size() == 1);
    for (std::size_t n = 0; n < 3; ++n) {
      CHECK(twisted.entries[0].groups[n].free_rank == plain.entries[0].groups[n].free_rank);
      CHECK(twisted.entries[0].groups[n].torsion == plain.entries[0].groups[n].torsion);
    }
  }
}

TEST_CASE("rational characters use their primitive representative") {
  Character half{{Rational(1, 2), Rational(1, 2)}};
  LabeledGraph pair(2, {});
  auto report = kernel_homology_report(pair, half, {FieldSpec{0}});
  CHECK(report.chi == std::vector<long>{1, 1});
}

TEST_CASE("obstruction generators") {
  LabeledGraph i24(2, {{0, 1, 4}});
  Cut cut{{0}, {1}};
  auto gens = normalized_h1_obstruction(i24, make_character({1, -1}), cut, FiniteQuotient{{2}, {{1}, {0}}});
  REQUIRE(gens.size() == 1);
  GroupRingElement one_plus_g;
  one_plus_g.add_term({0}, 1);
  one_plus_g.add_term({1}, 1);
  CHECK(gens[0] == one_plus_g);

  LabeledGraph i26(2, {{0, 1, 6}});
  auto cubic = normalized_h1_obstruction(i26, make_character({1, -1}), cut, FiniteQuotient{{3}, {{1}, {0}}});
  REQUIRE(cubic.size() == 1);
  CHECK(cubic[0].terms().size() == 3);

  auto two = normalized_h1_obstruction(i24, make_character({1, -1}), cut, FiniteQuotient{{2}, {{1}, {1}}});
  REQUIRE(two.size() == 1);
  GroupRingElement constant;
  constant.add_term({0}, 2);
  CHECK(two[0] == constant);

  try {
    normalized_h1_obstruction(i24, make_character({1, 1}), cut, FiniteQuotient{{2}, {{1}, {0}}});
    FAIL("expected CutInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CutInvalid);
  }
}

TEST_CASE("twisted first homology detects the dead edge") {
  LabeledGraph i24(2, {{0, 1, 4}});
  auto report = kernel_homology_report(i24, make_character({1, -1}), Twist{FiniteQuotient{{2}, {{1}, {0}}}, {}});
  bool infinite = false;
  for (const auto& entry : report.entries) {
    REQUIRE(entry.character);
    if (entry.groups[1].free_rank > 0) {
      infinite = true;
      CHECK((*entry.character)[0] == 1);
    }
  }
  CHECK(infinite);
}
