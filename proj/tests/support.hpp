#pragma once

#include <random>
#include <vector>

#include "artin/character.hpp"
#include "artin/graph.hpp"

namespace support {

using namespace artin;

inline LabeledGraph coherent_example() {
  return LabeledGraph({"a1", "a2", "a3", "b1", "b2", "c1"},
                      {{"a1", "a2", 3}, {"a1", "a3", 3}, {"a2", "a3", 2}, {"a3", "b1", 4}, {"b1", "b2", 5}, {"b2", "c1", 4}});
}

inline LabeledGraph square_example() {
  return LabeledGraph({"a1", "a2", "a3", "a4"},
                      {{"a1", "a2", 4}, {"a1", "a3", 6}, {"a1", "a4", 4}, {"a2", "a3", 6}, {"a3", "a4", 4}});
}

// Random graph on n vertices; each pair is an edge with probability p, label drawn from `labels`.
inline LabeledGraph random_graph(std::mt19937& rng, std::size_t n, double p, const std::vector<Label>& labels) {
  std::bernoulli_distribution edge(p);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.push_back({u, v, labels[pick(rng)]});
    }
  }
  return LabeledGraph(n, edges);
}

// Random integer character in [-bound, bound], constant on odd classes, not zero.
inline std::vector<long> random_character(std::mt19937& rng, const LabeledGraph& g, long bound) {
  const auto classes = odd_classes(g);
  std::uniform_int_distribution<long> value(-bound, bound);
  while (true) {
    std::vector<long> chi(g.vertex_count());
    for (const auto& members : classes.members) {
      const long x = value(rng);
      for (Vertex v : members) chi[v] = x;
    }
    for (long x : chi) {
      if (x != 0) return chi;
    }
  }
}

// Rank of a rational matrix by Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace support
