#include <benchmark/benchmark.h>

#include <numeric>

#include "linkirr/constructions.hpp"
#include "linkirr/enumeration.hpp"
#include "linkirr/isomorphism.hpp"
#include "linkirr/search.hpp"
#include "linkirr/verification.hpp"

namespace linkirr {
namespace {

std::vector<Vertex> shuffled(std::size_t n, Rng& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  for (std::size_t k = n; k > 1; --k) std::swap(p[k - 1], p[uniform_below(rng, k)]);
  return p;
}

void BM_IsomorphicTournaments(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const Digraph a = random_tournament(n, rng);
  const Digraph b = relabel(a, shuffled(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphicTournaments)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_IsomorphicCirculant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const Digraph a = circulant(n, n / 2);
  const Digraph b = relabel(a, shuffled(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphicCirculant)->Arg(8)->Arg(16)->Arg(32);

void BM_ConflictPairs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const Digraph d = random_tournament(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(conflict_pairs(d).count);
}
BENCHMARK(BM_ConflictPairs)->Arg(10)->Arg(20)->Arg(40);

void BM_ClimbStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  ConflictTracker tracker(random_tournament(n, rng));
  for (auto _ : state) {
    const auto u = static_cast<Vertex>(uniform_below(rng, n));
    auto v = static_cast<Vertex>(uniform_below(rng, n - 1));
    if (v >= u) ++v;
    benchmark::DoNotOptimize(tracker.graph().has_arc(u, v) ? tracker.reverse(u, v)
                                                           : tracker.reverse(v, u));
  }
}
BENCHMARK(BM_ClimbStep)->Arg(10)->Arg(20)->Arg(40);

void BM_SearchDefault(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WitnessLibrary lib = WitnessLibrary::builtin();
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(search(n, SearchBudget{}, ++seed, lib).outcome);
}
BENCHMARK(BM_SearchDefault)->Arg(6)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_EnumerateTournaments6(benchmark::State& state) {
  const EnumSpec spec{6, Universe::kTournaments, Predicate::kLinkIrregular, {}};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_counts(spec, 1).hits);
}
BENCHMARK(BM_EnumerateTournaments6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace linkirr

BENCHMARK_MAIN();
