#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "linkirr/graph.hpp"
#include "linkirr/link.hpp"
#include "linkirr/rng.hpp"

namespace linkirr {

/// Per-stage budgets. Defaults are the published ones.
struct SearchBudget {
  std::size_t random_attempts = 300;
  std::size_t hc_steps = 6000;
  std::size_t hc_restarts = 5;
  std::size_t seeded_attempts = 50;
  /// Hill-climb steps applied to a rejected seeded extension; 0 disables.
  std::size_t polish_steps = 0;
  /// Worker threads. Reports do not depend on this value.
  unsigned jobs = 1;

  /// Throws std::invalid_argument unless the four stage budgets are positive.
  void validate() const;
};

enum class Strategy { kRandom, kHillClimb, kSeeded };
enum class Outcome { kFound, kFailed };

std::string_view to_string(Strategy s);
std::string_view to_string(Outcome o);

struct SearchReport {
  std::size_t n = 0;
  Outcome outcome = Outcome::kFailed;
  Strategy strategy = Strategy::kRandom;
  std::uint64_t rng_seed = 0;
  std::vector<Arc> arcs;  // the tournament when found
  std::size_t attempts_used = 0;
  std::size_t flips_used = 0;
  std::size_t best_conflicts = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// How seeded extension orients the pairs touching a new vertex.
enum class ExtensionPolicy {
  kRandom,       // fair coin per pair
  kDominating,   // new vertex beats every earlier vertex
  kDominated,    // every earlier vertex beats the new vertex
  kAlternating,  // dominating, dominated, dominating, ...
};

/// Link-irregular tournaments keyed by order.
class WitnessLibrary {
 public:
  /// Throws std::invalid_argument unless d is a link-irregular tournament.
  void add(Digraph d);
  bool empty() const { return by_order_.empty(); }
  std::size_t size() const { return by_order_.size(); }
  /// Largest stored witness of order < n.
  const Digraph* largest_below(std::size_t n) const;
  const std::map<std::size_t, Digraph>& entries() const { return by_order_; }

  /// D6, D7, D8 and the regular tournament on 9 vertices.
  static WitnessLibrary builtin();
  /// Loads every file named w<n>.dg; other files are ignored.
  static WitnessLibrary load_directory(const std::filesystem::path& dir);

 private:
  std::map<std::size_t, Digraph> by_order_;
};

/// Conflict-pair count of a digraph under single-arc reversals, with link
/// signatures cached per vertex. Reversing (u,v) only changes the links of
/// common neighbors of u and v.
class ConflictTracker {
 public:
  explicit ConflictTracker(Digraph d);

  const Digraph& graph() const { return graph_; }
  std::size_t conflicts() const { return conflicts_; }

  /// Reverses (u,v) and returns the new conflict count.
  std::size_t reverse(Vertex u, Vertex v);
  /// Restores the state before the last reverse(). One level only.
  void undo();

 private:
  std::size_t recount() const;

  Digraph graph_;
  LinkProfile profile_;
  std::size_t conflicts_ = 0;

  struct Saved {
    Digraph graph;
    std::vector<std::pair<Vertex, LinkEntry>> entries;
    std::size_t conflicts = 0;
  };
  std::optional<Saved> saved_;
};

/// Each pair u < v, in lexicographic order, is oriented u->v when coin() is
/// false and v->u otherwise.
Digraph random_tournament(std::size_t n, Rng& rng);

struct ClimbResult {
  Digraph tournament;
  std::size_t conflicts = 0;
  std::size_t flips = 0;  // attempted reversals
  bool found = false;
};

/// One restart of the local search: reverse a uniformly random arc, keep it
/// unless the conflict count rises, stop at zero. `observer` sees the tracked
/// objective after every step.
ClimbResult climb(Digraph start, std::size_t steps, Rng& rng,
                  const std::function<void(std::size_t)>& observer = nullptr);

SearchReport random_search(std::size_t n, const SearchBudget& budget, std::uint64_t seed);
SearchReport hill_climb(std::size_t n, const SearchBudget& budget, std::uint64_t seed);
/// Throws std::invalid_argument when the library has no witness below n.
SearchReport seeded_extension(std::size_t n, const SearchBudget& budget, std::uint64_t seed,
                              const WitnessLibrary& library,
                              ExtensionPolicy policy = ExtensionPolicy::kRandom);

/// Random search, then hill climbing, then seeded extension (skipped when
/// the library has nothing below n). First success wins.
SearchReport search(std::size_t n, const SearchBudget& budget, std::uint64_t seed,
                    const WitnessLibrary& library);

/// Adds a vertex n beating every vertex of the tournament d.
Digraph extend_dominating(const Digraph& d);
/// Adds a vertex n beaten by every vertex of the tournament d.
Digraph extend_dominated(const Digraph& d);

/// Re-checks a found report from its arc list: tournament and link-irregular.
bool reverify(const SearchReport& report);

}  // namespace linkirr
