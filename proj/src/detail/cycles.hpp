#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "artin/graph.hpp"

namespace artin::detail {

inline constexpr std::size_t kExactCycleLimit = 12;

struct CycleSet {
  // Edge indices of each cycle in cyclic order.
  std::vector<std::vector<std::size_t>> cycles;
  bool exact = true;
};

// Even-length simple cycles of a multigraph (parallel edges give 2-cycles).
// All of them for at most kExactCycleLimit edges, otherwise the even
// fundamental cycles of a spanning forest.
CycleSet even_simple_cycles(const std::vector<MultiEdge>& edges, std::size_t vertex_count);

std::vector<std::size_t> order_cycle(const std::vector<MultiEdge>& edges, const std::vector<std::size_t>& subset);

// Signs p(e) = +-1 with p(e)p(f) = (-1)^(edges strictly between e and f) for
// every pair of same-coloured edges on a cycle. Unset when inconsistent or
// when some cycle meets a colour other than zero or two times.
std::optional<std::vector<int>> cycle_parities(const CycleSet& cycles, const std::vector<std::size_t>& colour);

}  // namespace artin::detail
