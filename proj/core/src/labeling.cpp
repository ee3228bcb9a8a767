#include "linkirr/labeling.hpp"

#include <string>

#include "linkirr/enumeration.hpp"
#include "linkirr/isomorphism.hpp"
#include "linkirr/verification.hpp"

namespace linkirr {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n)
    throw GraphError(GraphErrorKind::kOutOfRange,
                     "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
}

}  // namespace

UndirectedGraph undirected_link(const UndirectedGraph& g, Vertex v) {
  check_vertex(g.order(), v);
  return induced_subgraph(g, g.neighbors(v));
}

LabeledGraph labeled_link(const LabeledGraph& g, Vertex v) {
  check_vertex(g.order(), v);
  const VertexSet nbrs = g.base().neighbors(v);
  const auto members = nbrs.to_vector();
  std::vector<Vertex> index(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Vertex>(i);
  std::vector<LabeledGraph::LabeledEdge> edges;
  for (const auto& le : g.labeled_edges())
    if (nbrs.test(le.edge.u) && nbrs.test(le.edge.v))
      edges.push_back({make_edge(index[le.edge.u], index[le.edge.v]), le.label});
  return LabeledGraph::from_edges(members.size(), edges);
}

std::vector<Edge> link_edge_set(const UndirectedGraph& g, Vertex v) {
  check_vertex(g.order(), v);
  const VertexSet& nbrs = g.neighbors(v);
  std::vector<Edge> out;
  nbrs.for_each([&](Vertex a) {
    (g.neighbors(a) & nbrs).for_each([&](Vertex b) {
      if (a < b) out.push_back({a, b});
    });
  });
  return out;
}

PairCheck admits_link_irregular_labeling(const UndirectedGraph& g) {
  const std::size_t n = g.order();
  std::vector<UndirectedGraph> links;
  std::vector<std::vector<Edge>> edge_sets;
  for (Vertex v = 0; v < n; ++v) {
    links.push_back(undirected_link(g, v));
    edge_sets.push_back(link_edge_set(g, v));
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (edge_sets[x] == edge_sets[y] && are_isomorphic_undirected(links[x], links[y]))
        return {false, std::pair{x, y}};
  return {};
}

PairCheck verify_labeling(const LabeledGraph& g) {
  const std::size_t n = g.order();
  std::vector<LabeledGraph> links;
  for (Vertex v = 0; v < n; ++v) links.push_back(labeled_link(g, v));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (are_isomorphic_labeled(links[x], links[y])) return {false, std::pair{x, y}};
  return {};
}

Orientability is_link_irregular_orientable(const UndirectedGraph& g, unsigned jobs) {
  const EnumSpec spec{g.order(), Universe::kOrientationsOf, Predicate::kAll, g};
  const std::uint64_t size = universe_size(spec);
  Orientability result;
  const auto first = find_first_index(size, jobs, [&](std::uint64_t i) {
    return link_irregular(object_at(spec, i));
  });
  result.orientations_checked = first ? *first + 1 : size;
  if (first) {
    result.orientable = true;
    result.witness = object_at(spec, *first);
  }
  return result;
}

bool check_orientable_implies_labelable(const UndirectedGraph& g, unsigned jobs) {
  return !is_link_irregular_orientable(g, jobs).orientable ||
         admits_link_irregular_labeling(g).holds;
}

}  // namespace linkirr
