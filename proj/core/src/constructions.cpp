#include "linkirr/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "linkirr/arc_list.hpp"
#include "linkirr/labeling.hpp"
#include "linkirr/search.hpp"
#include "linkirr/verification.hpp"

namespace linkirr {

namespace {

// Arcs given with 1-based endpoints.
Digraph from_one_based(std::size_t n, std::initializer_list<std::pair<int, int>> arcs) {
  std::vector<Arc> out;
  for (auto [u, v] : arcs) out.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  return Digraph::from_arcs(n, out);
}

Digraph from_out_lists(const std::vector<std::vector<Vertex>>& lists) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < lists.size(); ++u)
    for (Vertex v : lists[u]) arcs.push_back({u, v});
  return Digraph::from_arcs(lists.size(), arcs);
}

}  // namespace

std::pair<Digraph, Digraph> figure1_pair() {
  Digraph left = from_one_based(5, {{3, 4}, {4, 5}, {2, 3}, {5, 1}, {5, 3}, {4, 1}, {2, 4}, {2, 5}});
  Digraph right = from_one_based(5, {{3, 4}, {4, 5}, {2, 3}, {1, 5}, {5, 3}, {4, 1}, {2, 4}, {2, 5}});
  return {std::move(left), std::move(right)};
}

Digraph d6() {
  return from_one_based(6, {{1, 6}, {1, 3}, {1, 4}, {2, 1}, {3, 2}, {3, 4}, {3, 6}, {4, 5},
                            {4, 6}, {4, 2}, {5, 1}, {5, 2}, {5, 3}, {5, 6}, {6, 2}});
}

Digraph d7() { return extend_dominating(d6()); }

Digraph d8() { return extend_dominated(d7()); }

Digraph circulant(std::size_t n, std::size_t k) {
  if (n < 3 || k < 1 || k > n - 1)
    throw std::invalid_argument("circulant needs n >= 3 and 1 <= k <= n-1");
  if (n > kMaxOrder) throw GraphError(GraphErrorKind::kTooLarge, "circulant order too large");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t j = 1; j <= k; ++j) arcs.push_back({i, static_cast<Vertex>((i + j) % n)});
  return Digraph::from_arcs(n, arcs);
}

Digraph two_out_regular_6() {
  return Digraph::from_arcs(6, {{0, 1}, {0, 2}, {1, 4}, {1, 2}, {2, 5}, {2, 4},
                                {3, 4}, {3, 2}, {4, 5}, {4, 0}, {5, 0}, {5, 3}});
}

Digraph regular_tournament_9() {
  return from_out_lists({{2, 3, 4, 7},
                         {0, 2, 5, 7},
                         {4, 5, 6, 7},
                         {1, 2, 6, 8},
                         {1, 3, 6, 7},
                         {0, 3, 4, 8},
                         {0, 1, 5, 8},
                         {3, 5, 6, 8},
                         {0, 1, 2, 4}});
}

Counterexample counterexample_graph() {
  const std::vector<std::pair<int, int>> one_based = {{1, 2}, {1, 4}, {1, 3}, {3, 6},
                                                      {2, 3}, {2, 5}, {2, 6}, {5, 6},
                                                      {4, 7}, {4, 6}, {6, 7}};
  std::vector<Edge> edges;
  std::vector<LabeledGraph::LabeledEdge> labeled;
  for (auto [a, b] : one_based) {
    const Edge e = make_edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    edges.push_back(e);
    const bool blue = (e == Edge{3, 5}) || (e == Edge{5, 6});
    labeled.push_back({e, blue ? 2u : 1u});
  }
  return {UndirectedGraph::from_edges(7, edges), LabeledGraph::from_edges(7, labeled)};
}

UndirectedGraph wheel(std::size_t n) {
  if (n < 3) throw std::invalid_argument("wheel needs n >= 3");
  if (n + 1 > kMaxOrder) throw GraphError(GraphErrorKind::kTooLarge, "wheel order too large");
  std::vector<Edge> edges;
  const auto hub = static_cast<Vertex>(n);
  for (Vertex i = 0; i < n; ++i) {
    edges.push_back(make_edge(i, static_cast<Vertex>((i + 1) % n)));
    edges.push_back({i, hub});
  }
  return UndirectedGraph::from_edges(n + 1, edges);
}

UndirectedGraph hypercube(std::size_t d) {
  if (d < 1 || d > 7) throw std::invalid_argument("hypercube needs 1 <= d <= 7");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t b = 0; b < d; ++b) {
      const auto v = static_cast<Vertex>(u ^ (1u << b));
      if (u < v) edges.push_back({u, v});
    }
  return UndirectedGraph::from_edges(n, edges);
}

std::string NamedConstruction::file_name() const {
  const char* ext = std::holds_alternative<Digraph>(object)           ? ".dg"
                    : std::holds_alternative<UndirectedGraph>(object) ? ".ug"
                                                                      : ".lg";
  return name + ext;
}

std::string NamedConstruction::render() const {
  std::vector<std::string> header = {name};
  header.insert(header.end(), notes.begin(), notes.end());
  std::string props = "properties:";
  for (const auto& p : expected_properties) props += " " + p;
  header.push_back(props);
  return std::visit(
      [&](const auto& obj) -> std::string {
        using T = std::decay_t<decltype(obj)>;
        if constexpr (std::is_same_v<T, Digraph>) return format_digraph(obj, header);
        else if constexpr (std::is_same_v<T, UndirectedGraph>) return format_undirected(obj, header);
        else return format_labeled(obj, header);
      },
      object);
}

const std::vector<NamedConstruction>& corpus() {
  static const std::vector<NamedConstruction> entries = [] {
    const auto [left, right] = figure1_pair();
    const Counterexample ce = counterexample_graph();
    const std::string shifted = "vertices are the original 1-based labels minus one";
    std::vector<NamedConstruction> v;
    v.push_back({"figure1-left", left, {"oriented", "link-irregular", "underlying-triangle"}, {shifted}});
    v.push_back({"figure1-right", right, {"oriented", "link-irregular", "underlying-triangle"},
                 {shifted, "figure1-left with the arc 4->0 reversed"}});
    v.push_back({"figure1-underlying", underlying_graph(left), {"orientable", "labelable"},
                 {"underlying graph of figure1-left"}});
    v.push_back({"d6", d6(), {"tournament", "link-irregular"}, {shifted}});
    v.push_back({"d7", d7(), {"tournament", "link-irregular"}, {"d6 plus vertex 6 beating all others"}});
    v.push_back({"d8", d8(), {"tournament", "link-irregular"}, {"d7 plus vertex 7 beaten by all others"}});
    v.push_back({"d9-dominating", extend_dominating(d8()), {"tournament", "not-link-irregular"},
                 {"d8 plus vertex 8 beating all others"}});
    v.push_back({"d9-dominated", extend_dominated(extend_dominating(d7())),
                 {"tournament", "not-link-irregular"},
                 {"d7 plus a dominating vertex 7, then a dominated vertex 8"}});
    v.push_back({"two-out-regular-6", two_out_regular_6(),
                 {"oriented", "out-regular=2", "link-irregular"}, {}});
    v.push_back({"regular-tournament-9", regular_tournament_9(),
                 {"tournament", "regular=4", "eulerian", "link-irregular"}, {}});
    v.push_back({"circulant-5-2", circulant(5, 2),
                 {"tournament", "regular=2", "eulerian", "not-link-irregular"},
                 {"arcs i -> i+1, i+2 mod 5"}});
    v.push_back({"circulant-6-3", circulant(6, 3), {"eulerian", "not-link-irregular"},
                 {"arcs i -> i+1, i+2, i+3 mod 6; digons on opposite pairs"}});
    v.push_back({"counterexample", ce.graph, {"labelable", "not-orientable"}, {shifted}});
    v.push_back({"counterexample-labeling", ce.labeling, {"labeling-verifies"},
                 {shifted, "label 1 = R, label 2 = B"}});
    v.push_back({"wheel-4", wheel(4), {"not-orientable"}, {"cycle 0..3, hub 4"}});
    return v;
  }();
  return entries;
}

std::optional<NamedConstruction> find_construction(std::string_view name) {
  for (const auto& c : corpus())
    if (c.name == name) return c;
  return std::nullopt;
}

namespace {

std::optional<std::size_t> parse_suffix(std::string_view prop, std::string_view key) {
  if (!prop.starts_with(key)) return std::nullopt;
  std::size_t k = 0;
  const auto tail = prop.substr(key.size());
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
  if (ec != std::errc{} || ptr != tail.data() + tail.size()) return std::nullopt;
  return k;
}

bool digraph_property(const Digraph& d, std::string_view prop) {
  if (prop == "tournament") return is_tournament(d);
  if (prop == "oriented") return is_oriented(d);
  if (prop == "link-irregular") return link_irregular(d);
  if (prop == "not-link-irregular") return !link_irregular(d);
  if (prop == "eulerian") return is_eulerian(d);
  if (prop == "underlying-triangle") return contains_triangle(underlying_graph(d));
  if (auto k = parse_suffix(prop, "out-regular=")) {
    for (Vertex v = 0; v < d.order(); ++v)
      if (d.out_degree(v) != *k) return false;
    return true;
  }
  if (auto k = parse_suffix(prop, "regular=")) {
    for (Vertex v = 0; v < d.order(); ++v)
      if (d.out_degree(v) != *k || d.in_degree(v) != *k) return false;
    return true;
  }
  return false;
}

bool undirected_property(const UndirectedGraph& g, std::string_view prop) {
  if (prop == "orientable") return is_link_irregular_orientable(g).orientable;
  if (prop == "not-orientable") return !is_link_irregular_orientable(g).orientable;
  if (prop == "labelable") return admits_link_irregular_labeling(g).holds;
  if (prop == "underlying-triangle") return contains_triangle(g);
  return false;
}

bool labeled_property(const LabeledGraph& g, std::string_view prop) {
  if (prop == "labeling-verifies") return verify_labeling(g).holds;
  return false;
}

}  // namespace

std::vector<std::string> failed_properties(const NamedConstruction& c) {
  std::vector<std::string> failed;
  for (const auto& prop : c.expected_properties) {
    const bool ok = std::visit(
        [&](const auto& obj) {
          using T = std::decay_t<decltype(obj)>;
          if constexpr (std::is_same_v<T, Digraph>) return digraph_property(obj, prop);
          else if constexpr (std::is_same_v<T, UndirectedGraph>) return undirected_property(obj, prop);
          else return labeled_property(obj, prop);
        },
        c.object);
    if (!ok) failed.push_back(prop);
  }
  return failed;
}

std::string render_manifest() {
  std::string out;
  for (const auto& c : corpus()) {
    out += c.file_name() + ":";
    for (const auto& p : c.expected_properties) out += " " + p;
    out += "\n";
  }
  return out;
}

}  // namespace linkirr
