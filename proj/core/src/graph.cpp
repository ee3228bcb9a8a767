#include "linkirr/graph.hpp"

#include <algorithm>
#include <string>

namespace linkirr {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxOrder)
    throw GraphError(GraphErrorKind::kTooLarge,
                     "order " + std::to_string(n) + " exceeds the maximum of " +
                         std::to_string(kMaxOrder));
}

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Digraph Digraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  check_order(n);
  Digraph d(n);
  for (const auto& a : arcs) {
    if (a.tail >= n || a.head >= n)
      throw GraphError(GraphErrorKind::kOutOfRange,
                       "arc " + pair_text(a.tail, a.head) + " has an endpoint outside [0, " +
                           std::to_string(n) + ")");
    if (a.tail == a.head)
      throw GraphError(GraphErrorKind::kSelfLoop, "self-loop at vertex " + std::to_string(a.tail));
    if (d.out_[a.tail].test(a.head))
      throw GraphError(GraphErrorKind::kDuplicate, "duplicate arc " + pair_text(a.tail, a.head));
    d.out_[a.tail].set(a.head);
    d.in_[a.head].set(a.tail);
    ++d.m_;
  }
  return d;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) out_[u].for_each([&](Vertex v) { out.push_back({u, v}); });
  return out;
}

Digraph Digraph::with_arc_reversed(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || !has_arc(u, v) || has_arc(v, u))
    throw GraphError(GraphErrorKind::kInvalidArgument,
                     "cannot reverse " + pair_text(u, v) + ": arc absent or part of a digon");
  Digraph d = *this;
  d.out_[u].reset(v);
  d.in_[v].reset(u);
  d.out_[v].set(u);
  d.in_[u].set(v);
  return d;
}

DigraphBuilder::DigraphBuilder(std::size_t n) {
  check_order(n);
  d_ = Digraph(n);
}

void DigraphBuilder::add_arc(Vertex u, Vertex v) {
  if (u == v || u >= d_.n_ || v >= d_.n_ || d_.out_[u].test(v))
    throw GraphError(GraphErrorKind::kInvalidArgument, "invalid arc " + pair_text(u, v));
  d_.out_[u].set(v);
  d_.in_[v].set(u);
  ++d_.m_;
}

UndirectedGraph UndirectedGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  check_order(n);
  UndirectedGraph g;
  g.n_ = n;
  g.adj_.resize(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw GraphError(GraphErrorKind::kOutOfRange,
                       "edge " + pair_text(e.u, e.v) + " has an endpoint outside [0, " +
                           std::to_string(n) + ")");
    if (e.u == e.v)
      throw GraphError(GraphErrorKind::kSelfLoop, "loop at vertex " + std::to_string(e.u));
    if (g.adj_[e.u].test(e.v))
      throw GraphError(GraphErrorKind::kDuplicate, "duplicate edge " + pair_text(e.u, e.v));
    g.adj_[e.u].set(e.v);
    g.adj_[e.v].set(e.u);
    ++g.m_;
  }
  return g;
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    adj_[u].for_each([&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  return out;
}

LabeledGraph LabeledGraph::from_edges(std::size_t n, std::span<const LabeledEdge> edges) {
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& le : edges) {
    if (le.label == 0)
      throw GraphError(GraphErrorKind::kInvalidArgument,
                       "edge " + pair_text(le.edge.u, le.edge.v) + " has label 0");
    plain.push_back(le.edge);
  }
  LabeledGraph lg;
  lg.base_ = UndirectedGraph::from_edges(n, plain);
  lg.edges_.reserve(edges.size());
  for (const auto& le : edges) lg.edges_.push_back({make_edge(le.edge.u, le.edge.v), le.label});
  std::sort(lg.edges_.begin(), lg.edges_.end());
  return lg;
}

LabeledGraph LabeledGraph::uniform(const UndirectedGraph& base, std::uint32_t label) {
  std::vector<LabeledEdge> edges;
  for (const auto& e : base.edges()) edges.push_back({e, label});
  return from_edges(base.order(), edges);
}

std::uint32_t LabeledGraph::label(Vertex u, Vertex v) const {
  const Edge key = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                             [](const LabeledEdge& le, const Edge& k) { return le.edge < k; });
  return it != edges_.end() && it->edge == key ? it->label : 0;
}

std::uint32_t LabeledGraph::max_label() const {
  std::uint32_t best = 0;
  for (const auto& le : edges_) best = std::max(best, le.label);
  return best;
}

UndirectedGraph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < d.order(); ++u)
    d.neighborhood(u).for_each([&](Vertex v) {
      if (u < v) edges.push_back({u, v});
    });
  return UndirectedGraph::from_edges(d.order(), edges);
}

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices) {
  VertexSet s;
  for (Vertex v : vertices) {
    if (v >= d.order())
      throw GraphError(GraphErrorKind::kOutOfRange,
                       "vertex " + std::to_string(v) + " outside [0, " + std::to_string(d.order()) +
                           ")");
    s.set(v);
  }
  return induced_subdigraph(d, s);
}

Digraph induced_subdigraph(const Digraph& d, const VertexSet& vertices) {
  if (!(vertices - d.vertices()).empty())
    throw GraphError(GraphErrorKind::kOutOfRange, "vertex set exceeds the digraph order");
  const auto members = vertices.to_vector();
  std::vector<Vertex> index(d.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Vertex>(i);
  DigraphBuilder b(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    (d.out_set(members[i]) & vertices).for_each([&](Vertex w) {
      b.add_arc(static_cast<Vertex>(i), index[w]);
    });
  return std::move(b).build();
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, const VertexSet& vertices) {
  const auto members = vertices.to_vector();
  std::vector<Vertex> index(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= g.order())
      throw GraphError(GraphErrorKind::kOutOfRange, "vertex set exceeds the graph order");
    index[members[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i)
    (g.neighbors(members[i]) & vertices).for_each([&](Vertex w) {
      if (members[i] < w) edges.push_back({static_cast<Vertex>(i), index[w]});
    });
  return UndirectedGraph::from_edges(members.size(), edges);
}

namespace {

void check_permutation(std::size_t n, std::span<const Vertex> perm) {
  if (perm.size() != n)
    throw GraphError(GraphErrorKind::kInvalidArgument, "permutation length differs from order");
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    if (p >= n || seen[p])
      throw GraphError(GraphErrorKind::kInvalidArgument, "not a permutation of [0, n)");
    seen[p] = true;
  }
}

}  // namespace

Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
  check_permutation(d.order(), perm);
  DigraphBuilder b(d.order());
  for (const auto& a : d.arcs()) b.add_arc(perm[a.tail], perm[a.head]);
  return std::move(b).build();
}

UndirectedGraph relabel(const UndirectedGraph& g, std::span<const Vertex> perm) {
  check_permutation(g.order(), perm);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return UndirectedGraph::from_edges(g.order(), edges);
}

std::vector<DegreeTriple> degrees(const Digraph& d) {
  std::vector<DegreeTriple> out(d.order());
  for (Vertex v = 0; v < d.order(); ++v)
    out[v] = {d.out_degree(v), d.in_degree(v), d.degree(v)};
  return out;
}

bool contains_triangle(const UndirectedGraph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    bool found = false;
    g.neighbors(u).for_each([&](Vertex v) {
      if (!found && u < v && !(g.neighbors(u) & g.neighbors(v)).empty()) found = true;
    });
    if (found) return true;
  }
  return false;
}

bool is_oriented(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v)
    if (!(d.out_set(v) & d.in_set(v)).empty()) return false;
  return true;
}

bool is_tournament(const Digraph& d) {
  if (!is_oriented(d)) return false;
  const std::size_t n = d.order();
  return d.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

namespace {

VertexSet reach(const Digraph& d, Vertex start, bool forward) {
  VertexSet seen;
  seen.set(start);
  std::vector<Vertex> stack{start};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    const VertexSet next = (forward ? d.out_set(v) : d.in_set(v)) - seen;
    next.for_each([&](Vertex w) {
      seen.set(w);
      stack.push_back(w);
    });
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  if (d.order() == 0) return false;
  const VertexSet all = d.vertices();
  return reach(d, 0, true) == all && reach(d, 0, false) == all;
}

bool is_eulerian(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.out_degree(v) != d.in_degree(v)) return false;
  return is_strongly_connected(d);
}

std::pair<Vertex, Vertex> two_degree_coincidence(const UndirectedGraph& g) {
  if (g.order() < 2)
    throw GraphError(GraphErrorKind::kInvalidArgument,
                     "two_degree_coincidence needs at least two vertices");
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.degree(u) == g.degree(v)) return {u, v};
  // Unreachable for simple graphs: degrees lie in [0, n-1] and 0 and n-1
  // cannot both occur.
  throw GraphError(GraphErrorKind::kInvalidArgument, "no equal-degree pair found");
}

Digraph forward_orientation(const UndirectedGraph& g) {
  DigraphBuilder b(g.order());
  for (const auto& e : g.edges()) b.add_arc(e.u, e.v);
  return std::move(b).build();
}

}  // namespace linkirr
