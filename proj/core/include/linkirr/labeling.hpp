#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "linkirr/graph.hpp"

namespace linkirr {

/// Subgraph induced by N(v), relabeled in ascending order.
UndirectedGraph undirected_link(const UndirectedGraph& g, Vertex v);

/// Labeled subgraph induced by N(v); labels carried over unchanged.
LabeledGraph labeled_link(const LabeledGraph& g, Vertex v);

/// Edges of g with both endpoints in N(v), in original vertex numbering.
std::vector<Edge> link_edge_set(const UndirectedGraph& g, Vertex v);

struct PairCheck {
  bool holds = true;
  std::optional<std::pair<Vertex, Vertex>> violation;  // first failing pair
};

/// A link-irregular labeling exists iff every pair x != y has
/// L(x) not isomorphic to L(y), or E(L(x)) != E(L(y)) as edge sets of g.
PairCheck admits_link_irregular_labeling(const UndirectedGraph& g);

/// Every pair of labeled links is non-isomorphic under label-preserving maps.
PairCheck verify_labeling(const LabeledGraph& g);

struct Orientability {
  bool orientable = false;
  std::optional<Digraph> witness;  // first link-irregular orientation
  std::uint64_t orientations_checked = 0;
};

/// Exhaustive over orientations, stopping at the first link-irregular one.
/// Throws EnumerationError above kMaxOrientationEdges edges.
Orientability is_link_irregular_orientable(const UndirectedGraph& g, unsigned jobs = 1);

/// not orientable, or labelable.
bool check_orientable_implies_labelable(const UndirectedGraph& g, unsigned jobs = 1);

}  // namespace linkirr
