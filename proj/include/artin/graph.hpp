#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

using Vertex = std::size_t;
using Label = unsigned;

// A missing edge stands for the label infinity.
inline constexpr Label kNoEdge = 0;

struct Edge {
  Vertex u;
  Vertex v;
  Label label;

  bool operator==(const Edge&) const = default;
};

struct NamedEdge {
  std::string u;
  std::string v;
  Label label;
};

// Finite simplicial graph with integer labels >= 2 on its edges.
// Vertices are indexed 0..n-1; the index order is the global vertex order.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(std::vector<std::string> names, const std::vector<NamedEdge>& edges);
  LabeledGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }
  std::optional<Vertex> find(std::string_view name) const;
  Vertex vertex(std::string_view name) const;

  Label label(Vertex u, Vertex v) const { return labels_[u * names_.size() + v]; }
  bool adjacent(Vertex u, Vertex v) const { return label(u, v) != kNoEdge; }

  // Edges with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Vertex> neighbours(Vertex v) const;

  bool operator==(const LabeledGraph& other) const {
    return names_ == other.names_ && labels_ == other.labels_;
  }

 private:
  void add_edge(Vertex u, Vertex v, Label label);

  std::vector<std::string> names_;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
};

// Induced subgraph on `subset`, which keeps the order of the parent graph.
// The result's vertex i corresponds to the i-th smallest element of subset.
LabeledGraph induced_subgraph(const LabeledGraph& g, std::vector<Vertex> subset);

// Components of the subgraph induced on `within` (all vertices if empty),
// ignoring edges for which `keep_edge` is false. Each component is sorted;
// components are ordered by their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const LabeledGraph& g);
std::vector<std::vector<Vertex>> connected_components(
    const LabeledGraph& g, const std::vector<Vertex>& within,
    const std::vector<Edge>& removed_edges = {});

struct ChordalityReport {
  bool chordal;
  // A chordless cycle of length >= 4 when not chordal.
  std::vector<Vertex> cycle;
};

ChordalityReport is_chordal(const LabeledGraph& g);

// All nonempty cliques with at most `max_size` vertices (0 = unbounded),
// ordered by size and then lexicographically.
std::vector<std::vector<Vertex>> enumerate_cliques(const LabeledGraph& g, std::size_t max_size = 0);

// Classes of the equivalence relation generated by odd-labelled edges.
struct OddClasses {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<Vertex>> members;
};

OddClasses odd_classes(const LabeledGraph& g);

struct MultiEdge {
  std::size_t a;  // class index
  std::size_t b;  // class index, a < b
  Label label;
  Vertex u;  // original endpoints
  Vertex v;
};

// Graph with vertices the odd classes, one edge per even edge with label > 2
// whose endpoints lie in different classes. Parallel edges are kept.
struct LabeledMultigraph {
  OddClasses classes;
  std::vector<MultiEdge> edges;

  std::size_t vertex_count() const { return classes.members.size(); }
};

LabeledMultigraph collapse_to_even_core(const LabeledGraph& g);

}  // namespace artin
