#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linkirr/vertex_set.hpp"

namespace linkirr {

enum class GraphErrorKind {
  kSelfLoop,
  kOutOfRange,
  kDuplicate,
  kTooLarge,
  kInvalidArgument,
};

/// Thrown when a graph would violate its structural invariants.
class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Unordered pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct DegreeTriple {
  std::size_t out = 0;
  std::size_t in = 0;
  std::size_t total = 0;  // underlying-graph degree
  friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

/// Loopless digraph on vertices 0..n-1 with bit-row adjacency. Digons are
/// representable; see is_oriented().
class Digraph {
 public:
  Digraph() = default;

  /// Validates and builds. Throws GraphError on self-loops, out-of-range
  /// endpoints, duplicate arcs or n > kMaxOrder.
  static Digraph from_arcs(std::size_t n, std::span<const Arc> arcs);
  static Digraph from_arcs(std::size_t n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }

  bool has_arc(Vertex u, Vertex v) const { return out_[u].test(v); }
  const VertexSet& out_set(Vertex v) const { return out_[v]; }
  const VertexSet& in_set(Vertex v) const { return in_[v]; }
  VertexSet neighborhood(Vertex v) const { return out_[v] | in_[v]; }
  VertexSet vertices() const { return VertexSet::prefix(n_); }

  std::size_t out_degree(Vertex v) const { return out_[v].count(); }
  std::size_t in_degree(Vertex v) const { return in_[v].count(); }
  std::size_t degree(Vertex v) const { return neighborhood(v).count(); }

  /// All arcs in lexicographic (tail, head) order.
  std::vector<Arc> arcs() const;

  /// Copy with arc (u,v) replaced by (v,u). Requires (u,v) present, (v,u) absent.
  Digraph with_arc_reversed(Vertex u, Vertex v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  explicit Digraph(std::size_t n) : n_(n), out_(n), in_(n) {}

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;

  friend class DigraphBuilder;
};

/// Unchecked incremental construction used by generators whose output is
/// valid by construction. build() re-checks nothing; callers own correctness.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(std::size_t n);
  void add_arc(Vertex u, Vertex v);
  Digraph build() && { return std::move(d_); }

 private:
  Digraph d_;
};

/// Simple undirected graph on vertices 0..n-1.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  static UndirectedGraph from_edges(std::size_t n, std::span<const Edge> edges);
  static UndirectedGraph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  /// All edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Undirected graph with a positive integer label on every edge.
class LabeledGraph {
 public:
  struct LabeledEdge {
    Edge edge;
    std::uint32_t label = 1;
    friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
  };

  LabeledGraph() = default;

  /// Throws GraphError on label 0 or any UndirectedGraph invariant violation.
  static LabeledGraph from_edges(std::size_t n, std::span<const LabeledEdge> edges);

  /// Every edge of `base` receives `label`.
  static LabeledGraph uniform(const UndirectedGraph& base, std::uint32_t label);

  const UndirectedGraph& base() const { return base_; }
  std::size_t order() const { return base_.order(); }
  std::size_t size() const { return base_.size(); }

  /// Label of edge {u,v}; 0 when absent.
  std::uint32_t label(Vertex u, Vertex v) const;
  std::uint32_t max_label() const;

  /// Labeled edges in lexicographic edge order.
  const std::vector<LabeledEdge>& labeled_edges() const { return edges_; }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  UndirectedGraph base_;
  std::vector<LabeledEdge> edges_;  // sorted by edge
};

// ---- structural operations ----

UndirectedGraph underlying_graph(const Digraph& d);

/// Induced subdigraph on `vertices`, relabeled 0..|S|-1 in ascending order.
/// Duplicates in the input are ignored. Throws GraphError on out-of-range.
Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices);
Digraph induced_subdigraph(const Digraph& d, const VertexSet& vertices);

UndirectedGraph induced_subgraph(const UndirectedGraph& g, const VertexSet& vertices);

/// Apply a vertex permutation: arc (u,v) becomes (perm[u], perm[v]).
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);
UndirectedGraph relabel(const UndirectedGraph& g, std::span<const Vertex> perm);

std::vector<DegreeTriple> degrees(const Digraph& d);

bool contains_triangle(const UndirectedGraph& g);
bool is_oriented(const Digraph& d);
bool is_tournament(const Digraph& d);
bool is_strongly_connected(const Digraph& d);
bool is_eulerian(const Digraph& d);

/// Lexicographically least pair u < v with equal degree. Throws for n < 2.
std::pair<Vertex, Vertex> two_degree_coincidence(const UndirectedGraph& g);

/// Orientation of `g` choosing u -> v (u < v) for every edge.
Digraph forward_orientation(const UndirectedGraph& g);

}  // namespace linkirr
