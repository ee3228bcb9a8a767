#include "linkirr/link.hpp"

#include <algorithm>
#include <string>

namespace linkirr {

Digraph link(const Digraph& d, Vertex v) {
  if (v >= d.order())
    throw GraphError(GraphErrorKind::kOutOfRange,
                     "vertex " + std::to_string(v) + " outside [0, " + std::to_string(d.order()) +
                         ")");
  return induced_subdigraph(d, d.neighborhood(v));
}

std::size_t directed_triangles_through(const Digraph& d, Vertex v) {
  if (v >= d.order())
    throw GraphError(GraphErrorKind::kOutOfRange,
                     "vertex " + std::to_string(v) + " outside [0, " + std::to_string(d.order()) +
                         ")");
  std::size_t count = 0;
  d.out_set(v).for_each([&](Vertex w) { count += (d.out_set(w) & d.in_set(v)).count(); });
  return count;
}

Signature signature(const Digraph& d) {
  Signature s;
  s.order = d.order();
  s.size = d.size();
  s.in_seq.reserve(d.order());
  s.out_seq.reserve(d.order());
  s.tri_seq.reserve(d.order());
  std::size_t tri_sum = 0;
  for (Vertex v = 0; v < d.order(); ++v) {
    s.in_seq.push_back(d.in_degree(v));
    s.out_seq.push_back(d.out_degree(v));
    const std::size_t t = directed_triangles_through(d, v);
    s.tri_seq.push_back(t);
    tri_sum += t;
  }
  std::sort(s.in_seq.begin(), s.in_seq.end());
  std::sort(s.out_seq.begin(), s.out_seq.end());
  std::sort(s.tri_seq.begin(), s.tri_seq.end());
  s.tri_total = tri_sum / 3;
  return s;
}

LinkProfile link_profile(const Digraph& d) {
  LinkProfile profile;
  profile.reserve(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    Digraph l = link(d, v);
    Signature sig = signature(l);
    profile.push_back({std::move(l), std::move(sig)});
  }
  return profile;
}

}  // namespace linkirr
