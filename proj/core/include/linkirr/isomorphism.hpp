#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linkirr/graph.hpp"

namespace linkirr {

/// Bijection from the vertices of the first graph to those of the second:
/// vertex i maps to mapping[i].
struct IsoWitness {
  std::vector<Vertex> mapping;
  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

/// Largest order accepted by brute_force_isomorphic (9! permutations).
inline constexpr std::size_t kBruteForceMaxOrder = 9;

// Exact decisions. Vertex classes come from (out, in, digon, 3-cycle) counts
// refined by neighbor colors; the backtracker then assigns vertices most
// constrained first and checks every cell against earlier assignments.

std::optional<IsoWitness> find_isomorphism(const Digraph& a, const Digraph& b);
bool are_isomorphic(const Digraph& a, const Digraph& b);

std::optional<IsoWitness> find_isomorphism(const UndirectedGraph& a, const UndirectedGraph& b);
bool are_isomorphic_undirected(const UndirectedGraph& a, const UndirectedGraph& b);

/// Label-preserving isomorphism. Labels are compared by equality only.
std::optional<IsoWitness> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b);
bool are_isomorphic_labeled(const LabeledGraph& a, const LabeledGraph& b);

/// Test oracle: tries every permutation. Throws GraphError (kTooLarge) above
/// kBruteForceMaxOrder.
bool brute_force_isomorphic(const Digraph& a, const Digraph& b);

/// True iff `w` is a bijection carrying the arc set of `a` exactly onto `b`.
bool is_valid_witness(const Digraph& a, const Digraph& b, const IsoWitness& w);

namespace detail {
/// Exact matching without the signature short-circuit. For callers that have
/// already compared signatures.
std::optional<IsoWitness> match_digraphs(const Digraph& a, const Digraph& b);
}  // namespace detail

}  // namespace linkirr
