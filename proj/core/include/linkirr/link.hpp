#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "linkirr/graph.hpp"

namespace linkirr {

/// Isomorphism-invariant fingerprint of a digraph. Equal signatures are
/// necessary for isomorphism, never sufficient.
struct Signature {
  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<std::size_t> in_seq;   // ascending
  std::vector<std::size_t> out_seq;  // ascending
  std::vector<std::size_t> tri_seq;  // per-vertex directed 3-cycles, ascending
  std::size_t tri_total = 0;

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// Directed link of v: the subdigraph induced by N+(v) ∪ N-(v), relabeled
/// in ascending vertex order. Throws GraphError when v is out of range.
Digraph link(const Digraph& d, Vertex v);

/// Number of directed 3-cycles v -> w -> x -> v through v. A digon is not a
/// 3-cycle; a triple carrying both cyclic orientations counts twice.
std::size_t directed_triangles_through(const Digraph& d, Vertex v);

Signature signature(const Digraph& d);

struct LinkEntry {
  Digraph link;
  Signature sig;
};

using LinkProfile = std::vector<LinkEntry>;

LinkProfile link_profile(const Digraph& d);

}  // namespace linkirr
