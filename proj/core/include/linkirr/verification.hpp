#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkirr/graph.hpp"
#include "linkirr/isomorphism.hpp"
#include "linkirr/link.hpp"

namespace linkirr {

enum class Verdict { kIrregular, kNotIrregular };

/// Two vertices with isomorphic links; `iso` maps link(u) onto link(v).
struct LinkWitness {
  Vertex u = 0;
  Vertex v = 0;
  IsoWitness iso;
};

struct LinkSummary {
  std::size_t order = 0;
  std::size_t size = 0;
};

/// Result of a link-irregularity check.
///
/// Digraphs of order 0 or 1 are reported not-irregular without a witness:
/// there is no pair to exhibit, and irregularity is only meaningful from
/// order 2 on.
struct Certificate {
  Verdict verdict = Verdict::kNotIrregular;
  std::optional<LinkWitness> witness;  // lexicographically least pair
  std::vector<LinkSummary> profile;
  std::size_t underlying_edges = 0;
  /// 3n - 6 for n >= 3. Informational only: more underlying edges than this
  /// rules out planarity.
  std::optional<std::size_t> planar_edge_limit;
};

struct ConflictOptions {
  /// Also run the exact test on signature-distinct pairs and throw
  /// PrefilterViolation if any of them turns out isomorphic.
  bool verify_prefilter = false;
};

class PrefilterViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ConflictReport {
  std::size_t count = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // u < v, lexicographic
};

/// Unordered pairs {u, v} with isomorphic links.
ConflictReport conflict_pairs(const Digraph& d, const ConflictOptions& options = {});

/// Same count from an already-computed profile.
ConflictReport conflict_pairs(const LinkProfile& profile);

/// Fast yes/no with early exit. False for order < 2.
bool link_irregular(const Digraph& d);

Certificate is_link_irregular(const Digraph& d);

/// Degree lower bounds every link-irregular digraph on n vertices must meet.
/// degree_bound = numerator / n exactly, so comparisons can stay integral.
struct BoundReport {
  std::size_t n = 0;
  std::size_t h = 0;
  std::int64_t numerator = 0;
  double degree_bound = 0.0;
  double outdegree_bound = 0.0;
};

/// Largest order accepted by bound_report.
inline constexpr std::size_t kBoundMaxOrder = std::size_t{1} << 53;

/// h is the largest integer with h(h-1) <= log2 n, i.e.
/// floor((1 + sqrt(1 + 4 log2 n)) / 2), and
/// degree_bound = h - sum_{d=1}^{h-1} (h-d)/n * 2^(2 C(d,2)).
/// Throws std::invalid_argument for n == 0 or n > kBoundMaxOrder.
BoundReport bound_report(std::size_t n);

/// Some vertex reaches degree_bound and some vertex reaches outdegree_bound.
bool check_bounds(const Digraph& d);

/// not link-irregular, or the underlying graph has a triangle.
bool check_triangle_necessity(const Digraph& d);

}  // namespace linkirr
