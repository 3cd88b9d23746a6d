#include <doctest.h>

#include <algorithm>
#include <set>

#include "artin/coxeter.hpp"
#include "artin/error.hpp"

using namespace artin;

namespace {

using QPoly = LaurentPoly<RationalField>;

LabeledGraph triangle(Label ab, Label bc, Label ca) {
  return LabeledGraph({"a", "b", "c"}, {{"a", "b", ab}, {"b", "c", bc}, {"a", "c", ca}});
}

std::vector<unsigned> degrees(const std::string& name) {
  if (name == "H3") return {2, 6, 10};
  if (name.rfind("I2(", 0) == 0) return {2, static_cast<unsigned>(std::stoul(name.substr(3)))};
  const unsigned n = static_cast<unsigned>(std::stoul(name.substr(1)));
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= n; ++i) out.push_back(name[0] == 'A' ? i + 1 : 2 * i);
  return out;
}

// Poincare polynomial of W_X as integer coefficients.
std::vector<long> poincare(const LabeledGraph& g, const std::vector<Vertex>& x) {
  std::vector<long> p{1};
  for (const auto& f : classify(g, x).factors) {
    for (unsigned d : degrees(f.name)) {
      std::vector<long> next(p.size() + d - 1, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (unsigned j = 0; j < d; ++j) next[i + j] += p[i];
      }
      p = next;
    }
  }
  return p;
}

// Exact quotient of polynomials with integer coefficients.
std::vector<long> divide(std::vector<long> a, const std::vector<long>& b) {
  std::vector<long> q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (long r : a) REQUIRE(r == 0);
  return q;
}

QPoly monomial(long c, long e) {
  RationalField q;
  return QPoly::monomial(q, q.from_int(c), static_cast<int>(e));
}

}  // namespace

TEST_CASE("classification examples") {
  auto b3 = classify(triangle(2, 3, 4), {0, 1, 2});
  CHECK(b3.spherical);
  CHECK(b3.description() == "B3");
  CHECK(b3.order == 48);
  CHECK_FALSE(is_spherical(triangle(3, 3, 3), {0, 1, 2}));
  CHECK(is_spherical(triangle(2, 2, 5), {0, 1, 2}));
  CHECK_FALSE(is_spherical(triangle(2, 3, 6), {0, 1, 2}));
  CHECK(is_spherical(triangle(2, 3, 6), {0}));
  CHECK(classify(triangle(3, 3, 2), {0, 1, 2}).description() == "A3");
  CHECK(classify(triangle(3, 3, 2), {0, 1, 2}).order == 24);
  CHECK(classify(triangle(5, 3, 2), {0, 1, 2}).order == 120);
  for (Label m = 2; m <= 12; ++m) {
    LabeledGraph edge({"a", "b"}, {{"a", "b", m}});
    auto type = classify(edge, {0, 1});
    CHECK(type.order == 2 * m);
    if (m == 2) CHECK(type.description() == "A1 x A1");
  }
  // A non-adjacent pair is not spherical.
  LabeledGraph apart({"a", "b"}, {});
  CHECK_FALSE(is_spherical(apart, {0, 1}));
}

TEST_CASE("larger spherical types") {
  // Paths of 3-edges are type A; a 4-edge at the end gives type B; a branch gives type D.
  LabeledGraph a4(4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {0, 2, 2}, {0, 3, 2}, {1, 3, 2}});
  CHECK(classify(a4, {0, 1, 2, 3}).description() == "A4");
  CHECK(classify(a4, {0, 1, 2, 3}).order == 120);
  LabeledGraph b4(4, {{0, 1, 4}, {1, 2, 3}, {2, 3, 3}, {0, 2, 2}, {0, 3, 2}, {1, 3, 2}});
  CHECK(classify(b4, {0, 1, 2, 3}).order == 384);
  LabeledGraph d4(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {1, 2, 2}, {1, 3, 2}, {2, 3, 2}});
  CHECK(classify(d4, {0, 1, 2, 3}).description() == "D4");
  CHECK(classify(d4, {0, 1, 2, 3}).order == 192);
  LabeledGraph f4(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}, {0, 2, 2}, {0, 3, 2}, {1, 3, 2}});
  CHECK(classify(f4, {0, 1, 2, 3}).description() == "F4");
  LabeledGraph h4(4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}, {0, 2, 2}, {0, 3, 2}, {1, 3, 2}});
  CHECK(classify(h4, {0, 1, 2, 3}).order == 14400);
  LabeledGraph affine(4, {{0, 1, 4}, {1, 2, 3}, {2, 3, 4}, {0, 2, 2}, {0, 3, 2}, {1, 3, 2}});
  CHECK_FALSE(is_spherical(affine, {0, 1, 2, 3}));
}

TEST_CASE("rank three spherical label multisets") {
  const std::set<std::vector<Label>> allowed{{2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
  for (Label x = 2; x <= 8; ++x) {
    for (Label y = 2; y <= 8; ++y) {
      for (Label z = 2; z <= 8; ++z) {
        std::vector<Label> sorted{x, y, z};
        std::sort(sorted.begin(), sorted.end());
        const bool expected = (sorted[0] == 2 && sorted[1] == 2) || allowed.count(sorted);
        CHECK(is_spherical(triangle(x, y, z), {0, 1, 2}) == expected);
      }
    }
  }
}

TEST_CASE("coset representatives match the Poincare polynomial quotient") {
  std::vector<LabeledGraph> graphs{LabeledGraph(1, {})};
  for (Label m = 2; m <= 8; ++m) graphs.push_back(LabeledGraph(2, {{0, 1, m}}));
  for (auto labels : std::vector<std::array<Label, 3>>{{2, 2, 2}, {2, 2, 3}, {2, 2, 6}, {3, 3, 2}, {4, 3, 2},
                                                       {3, 4, 2}, {5, 3, 2}, {3, 5, 2}, {2, 5, 3}, {2, 4, 3}}) {
    graphs.push_back(triangle(labels[0], labels[1], labels[2]));
  }
  for (const auto& g : graphs) {
    std::vector<Vertex> x(g.vertex_count());
    for (Vertex v = 0; v < x.size(); ++v) x[v] = v;
    REQUIRE(is_spherical(g, x));
    for (Vertex v : x) {
      std::vector<Vertex> rest;
      for (Vertex w : x) {
        if (w != v) rest.push_back(w);
      }
      const auto reps = minimal_coset_representatives(g, x, v);
      const Integer whole = classify(g, x).order;
      const Integer part = rest.empty() ? Integer(1) : classify(g, rest).order;
      CHECK(Integer(reps.size()) * part == whole);
      const auto expected = divide(poincare(g, x), rest.empty() ? std::vector<long>{1} : poincare(g, rest));
      std::vector<long> by_length(expected.size(), 0);
      std::set<std::vector<Vertex>> distinct;
      for (const auto& term : reps) {
        REQUIRE(term.word.size() < by_length.size());
        ++by_length[term.word.size()];
        CHECK(term.sign == (term.word.size() % 2 == 0 ? 1 : -1));
        distinct.insert(term.word);
        for (std::size_t i = 0; i + 1 < term.word.size(); ++i) CHECK(term.word[i] != term.word[i + 1]);
      }
      CHECK(distinct.size() == reps.size());
      CHECK(by_length == expected);
      for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1].word.size() <= reps[i].word.size());
    }
  }
}

TEST_CASE("B3 coset counts") {
  auto g = triangle(4, 3, 2);  // a -4- b -3- c, a -2- c
  CHECK(minimal_coset_representatives(g, {0, 1, 2}, 0).size() == 8);
  CHECK(minimal_coset_representatives(g, {0, 1, 2}, 2).size() == 6);
  CHECK(minimal_coset_representatives(g, {0, 1, 2}, 1).size() == 12);
}

TEST_CASE("coset enumeration errors") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvariantBreach;
  };
  CHECK(code([] { minimal_coset_representatives(triangle(3, 3, 3), {0, 1, 2}, 0); }) == ErrorCode::NotSpherical);
  LabeledGraph a4(4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {0, 2, 2}, {0, 3, 2}, {1, 3, 2}});
  CHECK(code([&] { minimal_coset_representatives(a4, {0, 1, 2, 3}, 0); }) == ErrorCode::RankTooLarge);
}

TEST_CASE("evaluation examples") {
  RationalField q;
  LabeledGraph single(1, {});
  auto s = evaluate_word_sum(q, minimal_coset_representatives(single, {0}, 0), {3});
  CHECK(s == monomial(1, 0) - monomial(1, 3));

  LabeledGraph i24(2, {{0, 1, 4}});
  auto e = evaluate_word_sum(q, minimal_coset_representatives(i24, {0, 1}, 0), {1, -1});
  CHECK(e == monomial(2, 0) - monomial(2, 1));

  LabeledGraph i26(2, {{0, 1, 6}});
  auto reps = minimal_coset_representatives(i26, {0, 1}, 0);
  REQUIRE(reps.size() == 6);
  CHECK(reps[1].word == std::vector<Vertex>{0});
  CHECK(reps[5].word == std::vector<Vertex>{0, 1, 0, 1, 0});
}

TEST_CASE("dihedral closed form") {
  RationalField q;
  for (Label k = 1; k <= 6; ++k) {
    LabeledGraph g(2, {{0, 1, 2 * k}});
    const auto reps = minimal_coset_representatives(g, {0, 1}, 0);
    for (long alpha = -3; alpha <= 3; ++alpha) {
      for (long beta = -3; beta <= 3; ++beta) {
        QPoly geometric(q);
        for (long j = 0; j < static_cast<long>(k); ++j) geometric += monomial(1, j * (alpha + beta));
        const QPoly expected = (monomial(1, 0) - monomial(1, alpha)) * geometric;
        CHECK(evaluate_word_sum(q, reps, {alpha, beta}) == expected);
      }
    }
  }
}

TEST_CASE("evaluation is independent of the reduced word") {
  // In an odd dihedral group chi is constant, so every word of a length evaluates alike.
  RationalField q;
  LabeledGraph g(2, {{0, 1, 5}});
  const auto reps = minimal_coset_representatives(g, {0, 1}, 1);
  SignedWordSum swapped = reps;
  for (auto& term : swapped) {
    for (auto& letter : term.word) letter = 1 - letter;
  }
  CHECK(evaluate_word_sum(q, reps, {2, 2}) == evaluate_word_sum(q, swapped, {2, 2}));
}
