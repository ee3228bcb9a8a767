#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "linkirr/graph.hpp"

namespace linkirr {

/// Which labeled objects to enumerate.
///
/// Every object is a vector of pair states over a fixed pair list: all
/// unordered pairs u < v in lexicographic order, or the edges of the base
/// graph for kOrientationsOf. State digits are ordered
/// {absent, u->v, v->u, digon}; a universe uses a contiguous subset of them.
/// Objects are produced in lexicographic order of that vector, first pair
/// most significant.
enum class Universe {
  kTournaments,     // {u->v, v->u}
  kOriented,        // {absent, u->v, v->u}
  kGeneral,         // all four states
  kOrientationsOf,  // {u->v, v->u} on the base graph's edges
};

enum class Predicate { kAll, kLinkIrregular };

struct EnumSpec {
  std::size_t n = 0;
  Universe universe = Universe::kTournaments;
  Predicate predicate = Predicate::kAll;
  std::optional<UndirectedGraph> base;  // required for kOrientationsOf
};

inline constexpr std::uint64_t kMaxUniverseSize = std::uint64_t{1} << 32;
inline constexpr std::size_t kMaxOrientationEdges = 30;

/// Universe too large for the guard, or a malformed spec.
class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumStats {
  std::uint64_t total = 0;
  std::uint64_t hits = 0;
  friend bool operator==(const EnumStats&, const EnumStats&) = default;
};

/// Closed-form size. Throws EnumerationError above kMaxUniverseSize.
std::uint64_t universe_size(const EnumSpec& spec);

/// The object at position `index` of the lexicographic stream.
Digraph object_at(const EnumSpec& spec, std::uint64_t index);

/// Visitor receives each object and whether it satisfies the predicate.
using EnumVisitor = std::function<void(const Digraph&, bool hit)>;

/// Single-stream enumeration in lexicographic order.
EnumStats enumerate(const EnumSpec& spec, const EnumVisitor& visit);

/// Positions [first, last) only. Contiguous position ranges correspond to
/// fixing prefixes of the pair-state vector.
EnumStats enumerate_range(const EnumSpec& spec, std::uint64_t first, std::uint64_t last,
                          const EnumVisitor& visit);

/// All 2^|E| orientations of g in lexicographic order over its edge list.
/// Throws EnumerationError when g has more than kMaxOrientationEdges edges.
void enumerate_orientations(const UndirectedGraph& g,
                            const std::function<void(const Digraph&)>& visit);

/// Counts only, partitioned over `jobs` workers; the merged result does not
/// depend on `jobs`.
EnumStats enumerate_counts(const EnumSpec& spec, unsigned jobs = 1);

/// Number of link-irregular members (labeled count).
std::uint64_t count_link_irregular(const EnumSpec& spec, unsigned jobs = 1);

/// Lowest index in [0, count) with pred(index) true, evaluated on `jobs`
/// workers. Indices below the answer are always evaluated.
std::optional<std::uint64_t> find_first_index(std::uint64_t count, unsigned jobs,
                                              const std::function<bool(std::uint64_t)>& pred);

std::string_view to_string(Universe u);
std::string_view to_string(Predicate p);
std::optional<Universe> parse_universe(std::string_view s);
std::optional<Predicate> parse_predicate(std::string_view s);

}  // namespace linkirr
