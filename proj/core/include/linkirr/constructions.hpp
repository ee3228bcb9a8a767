#pragma once

// Explicit digraphs and graphs with known link behavior. Sources that number
// vertices from 1 are stored shifted down by one.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "linkirr/graph.hpp"

namespace linkirr {

/// Two non-isomorphic link-irregular orientations of one 5-vertex graph.
/// They differ only in the arc between vertices 0 and 4.
std::pair<Digraph, Digraph> figure1_pair();

/// Link-irregular tournament on 6 vertices.
Digraph d6();
/// extend_dominating(d6()).
Digraph d7();
/// extend_dominated(d7()).
Digraph d8();

/// Arcs i -> (i + j) mod n for 1 <= j <= k. k > (n-1)/2 yields digons.
/// Throws std::invalid_argument unless n >= 3 and 1 <= k <= n-1.
Digraph circulant(std::size_t n, std::size_t k);

/// Link-irregular digraph on 6 vertices, every out-degree 2.
Digraph two_out_regular_6();

/// Link-irregular regular tournament on 9 vertices (every d+ = d- = 4).
Digraph regular_tournament_9();

/// 7-vertex graph with a link-irregular 2-labeling but no link-irregular
/// orientation. Labels: 1 = R, 2 = B; edges {3,5} and {5,6} are B.
struct Counterexample {
  UndirectedGraph graph;
  LabeledGraph labeling;
};
Counterexample counterexample_graph();

/// Cycle 0..n-1 plus hub n. Throws for n < 3.
UndirectedGraph wheel(std::size_t n);
/// d-dimensional cube on 2^d vertices. Throws unless 1 <= d <= 7.
UndirectedGraph hypercube(std::size_t d);

/// Corpus entry: an object plus the properties it must satisfy.
struct NamedConstruction {
  std::string name;
  std::variant<Digraph, UndirectedGraph, LabeledGraph> object;
  std::vector<std::string> expected_properties;
  std::vector<std::string> notes;  // written as the file's comment header

  std::string file_name() const;
  /// File contents in the matching arc-list format.
  std::string render() const;
};

/// The shipped corpus, in manifest order.
const std::vector<NamedConstruction>& corpus();
std::optional<NamedConstruction> find_construction(std::string_view name);

/// Property names understood by failed_properties():
///   tournament, oriented, link-irregular, not-link-irregular, eulerian,
///   out-regular=K, regular=K, underlying-triangle, orientable,
///   not-orientable, labelable, labeling-verifies
/// Returns the expected properties that do not hold (unknown names included).
std::vector<std::string> failed_properties(const NamedConstruction& c);

/// MANIFEST text: one line "<file>: <prop> <prop> ..." per corpus entry.
std::string render_manifest();

}  // namespace linkirr
