#include "artin/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "artin/error.hpp"

namespace artin {

namespace {

std::string default_name(std::size_t i) { return "v" + std::to_string(i); }

}  // namespace

LabeledGraph::LabeledGraph(std::vector<std::string> names, const std::vector<NamedEdge>& edges)
    : names_(std::move(names)), labels_(names_.size() * names_.size(), kNoEdge) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) {
      throw Error(ErrorCode::SchemaError, "vertex '" + n + "' declared twice");
    }
  }
  for (const auto& e : edges) {
    add_edge(vertex(e.u), vertex(e.v), e.label);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
}

LabeledGraph::LabeledGraph(std::size_t n, const std::vector<Edge>& edges)
    : labels_(n * n, kNoEdge) {
  names_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names_.push_back(default_name(i));
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
    }
    add_edge(e.u, e.v, e.label);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
}

void LabeledGraph::add_edge(Vertex u, Vertex v, Label label) {
  if (u == v) throw Error(ErrorCode::LoopEdge, "loop at '" + names_[u] + "'");
  if (label < 2) {
    throw Error(ErrorCode::BadLabel, "label " + std::to_string(label) + " on edge " + names_[u] +
                                         "-" + names_[v] + " (labels must be >= 2)");
  }
  if (adjacent(u, v)) {
    throw Error(ErrorCode::DuplicateEdge, "edge " + names_[u] + "-" + names_[v] + " given twice");
  }
  const std::size_t n = names_.size();
  labels_[u * n + v] = label;
  labels_[v * n + u] = label;
  edges_.push_back({std::min(u, v), std::max(u, v), label});
}

std::optional<Vertex> LabeledGraph::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Vertex LabeledGraph::vertex(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

std::vector<Vertex> LabeledGraph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < vertex_count(); ++w) {
    if (adjacent(v, w)) out.push_back(w);
  }
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::vector<Vertex> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<std::string> names;
  for (Vertex v : subset) names.push_back(g.name(v));
  std::vector<NamedEdge> edges;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (Label l = g.label(subset[i], subset[j]); l != kNoEdge) {
        edges.push_back({g.name(subset[i]), g.name(subset[j]), l});
      }
    }
  }
  return LabeledGraph(std::move(names), edges);
}

std::vector<std::vector<Vertex>> connected_components(const LabeledGraph& g) {
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});
  return connected_components(g, all);
}

std::vector<std::vector<Vertex>> connected_components(const LabeledGraph& g,
                                                      const std::vector<Vertex>& within,
                                                      const std::vector<Edge>& removed_edges) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> inside(n, false);
  for (Vertex v : within) inside[v] = true;
  auto removed = [&](Vertex a, Vertex b) {
    return std::any_of(removed_edges.begin(), removed_edges.end(), [&](const Edge& e) {
      return (e.u == a && e.v == b) || (e.u == b && e.v == a);
    });
  };
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (!inside[s] || seen[s]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (Vertex y = 0; y < n; ++y) {
        if (inside[y] && !seen[y] && g.adjacent(x, y) && !removed(x, y)) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Shortest path from x to y whose interior avoids the closed neighbourhood of z.
std::vector<Vertex> path_avoiding(const LabeledGraph& g, Vertex z, Vertex x, Vertex y) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> blocked(n, false);
  blocked[z] = true;
  for (Vertex w : g.neighbours(z)) blocked[w] = (w != x && w != y);
  std::vector<std::optional<Vertex>> parent(n);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{x};
  seen[x] = true;
  while (!queue.empty()) {
    Vertex a = queue.front();
    queue.pop_front();
    if (a == y) break;
    for (Vertex b = 0; b < n; ++b) {
      if (seen[b] || blocked[b] || !g.adjacent(a, b)) continue;
      if (a == x && b == y) continue;  // x and y are not adjacent anyway
      seen[b] = true;
      parent[b] = a;
      queue.push_back(b);
    }
  }
  if (!seen[y]) return {};
  std::vector<Vertex> path{y};
  while (path.back() != x) path.push_back(*parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> find_chordless_cycle(const LabeledGraph& g) {
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    auto nb = g.neighbours(z);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        auto path = path_avoiding(g, z, nb[i], nb[j]);
        if (!path.empty()) {
          path.insert(path.begin(), z);
          return path;
        }
      }
    }
  }
  return {};
}

}  // namespace

ChordalityReport is_chordal(const LabeledGraph& g) {
  // Maximum cardinality search, then check the reverse order is a perfect
  // elimination ordering.
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<std::size_t> position(n, 0);
  std::vector<Vertex> order;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (best == n || weight[v] > weight[best])) best = v;
    }
    numbered[best] = true;
    position[best] = step;
    order.push_back(best);
    for (Vertex w : g.neighbours(best)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  bool chordal = true;
  for (Vertex v : order) {
    // Earlier-numbered neighbours of v must form a clique; it suffices to
    // check they are adjacent to the latest of them.
    std::vector<Vertex> earlier;
    for (Vertex w : g.neighbours(v)) {
      if (position[w] < position[v]) earlier.push_back(w);
    }
    if (earlier.empty()) continue;
    Vertex parent = *std::max_element(earlier.begin(), earlier.end(),
                                      [&](Vertex a, Vertex b) { return position[a] < position[b]; });
    for (Vertex w : earlier) {
      if (w != parent && !g.adjacent(w, parent)) chordal = false;
    }
  }
  if (chordal) return {true, {}};
  return {false, find_chordless_cycle(g)};
}

std::vector<std::vector<Vertex>> enumerate_cliques(const LabeledGraph& g, std::size_t max_size) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;
  auto extend = [&](auto&& self, Vertex start) -> void {
    if (max_size != 0 && current.size() == max_size) return;
    for (Vertex v = start; v < n; ++v) {
      bool ok = std::all_of(current.begin(), current.end(), [&](Vertex w) { return g.adjacent(v, w); });
      if (!ok) continue;
      current.push_back(v);
      out.push_back(current);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

OddClasses odd_classes(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    if (e.label % 2 == 1) {
      auto a = root(e.u), b = root(e.v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OddClasses out;
  out.class_of.assign(n, 0);
  std::vector<std::optional<std::size_t>> index_of_root(n);
  for (Vertex v = 0; v < n; ++v) {
    auto r = root(v);
    if (!index_of_root[r]) {
      index_of_root[r] = out.members.size();
      out.members.emplace_back();
    }
    out.class_of[v] = *index_of_root[r];
    out.members[*index_of_root[r]].push_back(v);
  }
  return out;
}

LabeledMultigraph collapse_to_even_core(const LabeledGraph& g) {
  LabeledMultigraph out{odd_classes(g), {}};
  for (const auto& e : g.edges()) {
    if (e.label % 2 == 1 || e.label == 2) continue;
    auto a = out.classes.class_of[e.u];
    auto b = out.classes.class_of[e.v];
    if (a == b) continue;
    out.edges.push_back({std::min(a, b), std::max(a, b), e.label, e.u, e.v});
  }
  return out;
}

}  // namespace artin
