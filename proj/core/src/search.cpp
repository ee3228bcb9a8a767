#include "linkirr/search.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "linkirr/arc_list.hpp"
#include "linkirr/constructions.hpp"
#include "linkirr/enumeration.hpp"
#include "linkirr/verification.hpp"

namespace linkirr {

namespace {

constexpr std::uint32_t kRandomStage = 0;
constexpr std::uint32_t kClimbStage = 1;
constexpr std::uint32_t kSeededStage = 2;

using Clock = std::chrono::steady_clock;

struct TaskResult {
  bool found = false;
  Digraph tournament;
  std::size_t conflicts = 0;
  std::size_t flips = 0;
};

struct StageResult {
  std::optional<TaskResult> winner;
  std::size_t attempts = 0;
  std::size_t flips = 0;
  std::size_t best_conflicts = SIZE_MAX;
};

// Runs tasks 0..count-1, possibly concurrently. The outcome is that of the
// lowest-index success; statistics cover exactly the tasks up to it (or all
// tasks on failure), so they do not depend on the worker count.
StageResult run_stage(std::size_t count, unsigned jobs,
                      const std::function<TaskResult(std::size_t)>& task) {
  std::vector<std::optional<TaskResult>> results(count);
  const auto first = find_first_index(count, jobs, [&](std::uint64_t i) {
    results[i] = task(static_cast<std::size_t>(i));
    return results[i]->found;
  });
  StageResult stage;
  stage.attempts = first ? static_cast<std::size_t>(*first) + 1 : count;
  for (std::size_t i = 0; i < stage.attempts; ++i) {
    stage.flips += results[i]->flips;
    stage.best_conflicts = std::min(stage.best_conflicts, results[i]->conflicts);
  }
  if (first) stage.winner = std::move(results[*first]);
  return stage;
}

std::size_t conflict_count(const Digraph& d) { return conflict_pairs(d).count; }

bool accepts(const Digraph& d, std::size_t conflicts) { return d.order() >= 2 && conflicts == 0; }

SearchReport make_report(std::size_t n, Strategy strategy, std::uint64_t seed,
                         const StageResult& stage, Clock::time_point start) {
  SearchReport r;
  r.n = n;
  r.strategy = strategy;
  r.rng_seed = seed;
  r.attempts_used = stage.attempts;
  r.flips_used = stage.flips;
  r.best_conflicts = stage.best_conflicts == SIZE_MAX ? 0 : stage.best_conflicts;
  if (stage.winner) {
    r.outcome = Outcome::kFound;
    r.arcs = stage.winner->tournament.arcs();
    r.best_conflicts = 0;
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

StageResult random_stage(std::size_t n, const SearchBudget& budget, std::uint64_t seed) {
  return run_stage(budget.random_attempts, budget.jobs, [&](std::size_t i) {
    Rng rng = make_stream(seed, kRandomStage, i);
    TaskResult t;
    t.tournament = random_tournament(n, rng);
    t.conflicts = conflict_count(t.tournament);
    t.found = accepts(t.tournament, t.conflicts);
    return t;
  });
}

StageResult climb_stage(std::size_t n, const SearchBudget& budget, std::uint64_t seed) {
  return run_stage(budget.hc_restarts, budget.jobs, [&](std::size_t i) {
    Rng rng = make_stream(seed, kClimbStage, i);
    Digraph start = random_tournament(n, rng);
    ClimbResult c = climb(std::move(start), budget.hc_steps, rng);
    return TaskResult{c.found, std::move(c.tournament), c.conflicts, c.flips};
  });
}

bool new_vertex_is_tail(ExtensionPolicy policy, std::size_t added_index, Rng& rng) {
  switch (policy) {
    case ExtensionPolicy::kRandom:
      return coin(rng);
    case ExtensionPolicy::kDominating:
      return true;
    case ExtensionPolicy::kDominated:
      return false;
    case ExtensionPolicy::kAlternating:
      return added_index % 2 == 0;
  }
  return false;
}

StageResult seeded_stage(std::size_t n, const SearchBudget& budget, std::uint64_t seed,
                         const Digraph& base, ExtensionPolicy policy) {
  return run_stage(budget.seeded_attempts, budget.jobs, [&](std::size_t i) {
    Rng rng = make_stream(seed, kSeededStage, i);
    DigraphBuilder b(n);
    for (const auto& a : base.arcs()) b.add_arc(a.tail, a.head);
    for (Vertex x = static_cast<Vertex>(base.order()); x < n; ++x)
      for (Vertex y = 0; y < x; ++y) {
        if (new_vertex_is_tail(policy, x - base.order(), rng))
          b.add_arc(x, y);
        else
          b.add_arc(y, x);
      }
    TaskResult t;
    t.tournament = std::move(b).build();
    t.conflicts = conflict_count(t.tournament);
    t.found = accepts(t.tournament, t.conflicts);
    if (!t.found && budget.polish_steps > 0) {
      ClimbResult c = climb(std::move(t.tournament), budget.polish_steps, rng);
      t = TaskResult{c.found, std::move(c.tournament), c.conflicts, c.flips};
    }
    return t;
  });
}

}  // namespace

void SearchBudget::validate() const {
  if (random_attempts == 0 || hc_steps == 0 || hc_restarts == 0 || seeded_attempts == 0)
    throw std::invalid_argument("search budgets must be positive");
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kRandom:
      return "random";
    case Strategy::kHillClimb:
      return "hillclimb";
    case Strategy::kSeeded:
      return "seeded";
  }
  return "?";
}

std::string_view to_string(Outcome o) { return o == Outcome::kFound ? "found" : "failed"; }

void WitnessLibrary::add(Digraph d) {
  if (!is_tournament(d) || !link_irregular(d))
    throw std::invalid_argument("witness of order " + std::to_string(d.order()) +
                                " is not a link-irregular tournament");
  const std::size_t n = d.order();
  by_order_.insert_or_assign(n, std::move(d));
}

const Digraph* WitnessLibrary::largest_below(std::size_t n) const {
  auto it = by_order_.lower_bound(n);
  if (it == by_order_.begin()) return nullptr;
  return &std::prev(it)->second;
}

WitnessLibrary WitnessLibrary::builtin() {
  WitnessLibrary lib;
  lib.add(d6());
  lib.add(d7());
  lib.add(d8());
  lib.add(regular_tournament_9());
  return lib;
}

WitnessLibrary WitnessLibrary::load_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw std::runtime_error("witness library " + dir.string() + " is not a directory");
  WitnessLibrary lib;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() < 5 || name.front() != 'w' || !name.ends_with(".dg")) continue;
    std::size_t n = 0;
    const char* first = name.data() + 1;
    const char* last = name.data() + name.size() - 3;
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last) continue;
    Digraph d = load_digraph(entry.path());
    if (d.order() != n)
      throw std::runtime_error(name + " holds a digraph of order " + std::to_string(d.order()));
    lib.add(std::move(d));
  }
  return lib;
}

ConflictTracker::ConflictTracker(Digraph d) : graph_(std::move(d)), profile_(link_profile(graph_)) {
  conflicts_ = recount();
}

std::size_t ConflictTracker::recount() const { return conflict_pairs(profile_).count; }

std::size_t ConflictTracker::reverse(Vertex u, Vertex v) {
  Saved saved{graph_, {}, conflicts_};
  graph_ = graph_.with_arc_reversed(u, v);
  VertexSet affected = graph_.neighborhood(u) & graph_.neighborhood(v);
  affected.reset(u);
  affected.reset(v);
  affected.for_each([&](Vertex w) {
    saved.entries.emplace_back(w, std::move(profile_[w]));
    Digraph l = link(graph_, w);
    Signature sig = signature(l);
    profile_[w] = LinkEntry{std::move(l), std::move(sig)};
  });
  conflicts_ = recount();
  saved_ = std::move(saved);
  return conflicts_;
}

void ConflictTracker::undo() {
  if (!saved_) throw std::logic_error("ConflictTracker::undo without a prior reverse");
  graph_ = std::move(saved_->graph);
  for (auto& [w, entry] : saved_->entries) profile_[w] = std::move(entry);
  conflicts_ = saved_->conflicts;
  saved_.reset();
}

Digraph random_tournament(std::size_t n, Rng& rng) {
  DigraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng))
        b.add_arc(v, u);
      else
        b.add_arc(u, v);
    }
  return std::move(b).build();
}

ClimbResult climb(Digraph start, std::size_t steps, Rng& rng,
                  const std::function<void(std::size_t)>& observer) {
  if (!is_tournament(start)) throw std::invalid_argument("climb needs a tournament");
  const std::size_t n = start.order();
  if (n < 2) throw std::invalid_argument("climb needs at least two vertices");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});

  ConflictTracker tracker(std::move(start));
  ClimbResult result;
  while (tracker.conflicts() != 0 && result.flips < steps) {
    const Edge p = pairs[uniform_below(rng, pairs.size())];
    const std::size_t before = tracker.conflicts();
    const bool forward = tracker.graph().has_arc(p.u, p.v);
    const std::size_t after = forward ? tracker.reverse(p.u, p.v) : tracker.reverse(p.v, p.u);
    ++result.flips;
    if (after > before) tracker.undo();
    if (observer) observer(tracker.conflicts());
  }
  result.conflicts = tracker.conflicts();
  result.found = result.conflicts == 0;
  result.tournament = tracker.graph();
  return result;
}

SearchReport random_search(std::size_t n, const SearchBudget& budget, std::uint64_t seed) {
  budget.validate();
  if (n < 1) throw std::invalid_argument("random_search needs n >= 1");
  const auto start = Clock::now();
  return make_report(n, Strategy::kRandom, seed, random_stage(n, budget, seed), start);
}

SearchReport hill_climb(std::size_t n, const SearchBudget& budget, std::uint64_t seed) {
  budget.validate();
  if (n < 2) throw std::invalid_argument("hill_climb needs n >= 2");
  const auto start = Clock::now();
  return make_report(n, Strategy::kHillClimb, seed, climb_stage(n, budget, seed), start);
}

SearchReport seeded_extension(std::size_t n, const SearchBudget& budget, std::uint64_t seed,
                              const WitnessLibrary& library, ExtensionPolicy policy) {
  budget.validate();
  if (library.empty()) throw std::invalid_argument("seeded_extension: empty witness library");
  const Digraph* base = library.largest_below(n);
  if (base == nullptr)
    throw std::invalid_argument("seeded_extension: no witness of order below " +
                                std::to_string(n));
  const auto start = Clock::now();
  return make_report(n, Strategy::kSeeded, seed, seeded_stage(n, budget, seed, *base, policy),
                     start);
}

SearchReport search(std::size_t n, const SearchBudget& budget, std::uint64_t seed,
                    const WitnessLibrary& library) {
  budget.validate();
  if (n < 1) throw std::invalid_argument("search needs n >= 1");
  const auto start = Clock::now();

  StageResult total;
  Strategy last = Strategy::kRandom;
  auto absorb = [&](StageResult stage, Strategy strategy) {
    last = strategy;
    total.attempts += stage.attempts;
    total.flips += stage.flips;
    total.best_conflicts = std::min(total.best_conflicts, stage.best_conflicts);
    if (stage.winner) total.winner = std::move(stage.winner);
    return total.winner.has_value();
  };

  if (!absorb(random_stage(n, budget, seed), Strategy::kRandom) && n >= 2 &&
      !absorb(climb_stage(n, budget, seed), Strategy::kHillClimb)) {
    if (const Digraph* base = library.largest_below(n))
      absorb(seeded_stage(n, budget, seed, *base, ExtensionPolicy::kRandom), Strategy::kSeeded);
  }
  return make_report(n, last, seed, total, start);
}

namespace {

Digraph extend(const Digraph& d, bool dominating) {
  if (!is_tournament(d)) throw std::invalid_argument("extension needs a tournament");
  const auto added = static_cast<Vertex>(d.order());
  DigraphBuilder b(d.order() + 1);
  for (const auto& a : d.arcs()) b.add_arc(a.tail, a.head);
  for (Vertex v = 0; v < added; ++v) {
    if (dominating)
      b.add_arc(added, v);
    else
      b.add_arc(v, added);
  }
  return std::move(b).build();
}

}  // namespace

Digraph extend_dominating(const Digraph& d) { return extend(d, true); }
Digraph extend_dominated(const Digraph& d) { return extend(d, false); }

bool reverify(const SearchReport& report) {
  if (report.outcome != Outcome::kFound) return false;
  const Digraph d = Digraph::from_arcs(report.n, report.arcs);
  return is_tournament(d) && link_irregular(d);
}

}  // namespace linkirr
