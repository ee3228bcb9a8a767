// Acceptance harness: one PASS/FAIL line per criterion.
//
//   acceptance               run every criterion
//   acceptance --criterion K run criterion K only
//
// Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cli.hpp"
#include "linkirr/constructions.hpp"
#include "linkirr/enumeration.hpp"
#include "linkirr/isomorphism.hpp"
#include "linkirr/labeling.hpp"
#include "linkirr/link.hpp"
#include "linkirr/search.hpp"
#include "linkirr/verification.hpp"

namespace linkirr {
namespace {

using Clock = std::chrono::steady_clock;

// ---- pinned thresholds and frozen values ----

constexpr double kLimitC1 = 5.0;
constexpr double kLimitC2 = 1.0;
constexpr double kLimitC3 = 1.0;
constexpr double kLimitC4 = 60.0;
constexpr double kLimitC5 = 1.0;
constexpr double kLimitC6 = 1800.0;
constexpr double kLimitC6PerSeedAt40 = 60.0;
constexpr double kLimitC7 = 10.0;
constexpr double kLimitC8 = 1.0;
constexpr double kLimitC9 = 60.0;
constexpr double kLimitC10 = 5.0;
constexpr double kLimitC11 = 120.0;
constexpr double kLimitC12 = 30.0;

constexpr std::size_t kSearchMinOrder = 6;
constexpr std::size_t kSearchMaxOrder = 40;
constexpr std::uint64_t kSearchSeeds[] = {1, 2, 3};

// Exhaustive count over the 32768 labeled tournaments on 6 vertices,
// frozen from an independent networkx run and confirmed on first build.
constexpr std::uint64_t kLinkIrregularTournaments6 = 2880;

constexpr std::size_t kTriangleSamples = 10000;
constexpr std::size_t kIsoPairs = 1200;
constexpr double kBoundTolerance = 1e-9;

struct FrozenBound {
  std::size_t n;
  std::size_t h;
  double degree_bound;
};
// Evaluated with mpmath at 50 digits.
constexpr FrozenBound kFrozenBounds[] = {
    {1, 1, 1.0},
    {5, 2, 1.8},
    {6, 2, 1.8333333333333333},
    {9, 2, 1.8888888888888889},
    {100, 3, 2.94},
};

// ---- harness ----

struct Result {
  bool pass = true;
  std::string detail;
};

class Detail {
 public:
  template <class T>
  Detail& operator<<(const T& v) {
    os_ << v;
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

unsigned worker_count() { return std::max(1U, std::thread::hardware_concurrency()); }

// ---- shared search sweep ----

struct SweepEntry {
  std::size_t n;
  std::uint64_t seed;
  SearchReport report;
  std::string serialized;
  double seconds;
};

std::vector<SweepEntry> run_sweep(unsigned jobs) {
  const WitnessLibrary lib = WitnessLibrary::builtin();
  SearchBudget budget;
  budget.jobs = jobs;
  std::vector<SweepEntry> out;
  for (std::size_t n = kSearchMinOrder; n <= kSearchMaxOrder; ++n)
    for (std::uint64_t seed : kSearchSeeds) {
      const auto t = Clock::now();
      SearchReport r = search(n, budget, seed, lib);
      const double s = seconds_since(t);
      std::string text = cli::to_json(r).dump();
      out.push_back({n, seed, std::move(r), std::move(text), s});
    }
  return out;
}

const std::vector<SweepEntry>& sweep() {
  static const std::vector<SweepEntry> cached = run_sweep(1);
  return cached;
}

// ---- criteria ----

Result c1_nonexistence_below_5() {
  Result r;
  Detail d;
  d << "oriented hits";
  for (std::size_t n = 2; n <= 4; ++n) {
    const EnumStats s = enumerate_counts({n, Universe::kOriented, Predicate::kLinkIrregular, {}},
                                         worker_count());
    d << " n" << n << "=" << s.hits << "/" << s.total;
    r.pass = r.pass && s.hits == 0;
  }
  d << "; general hits";
  for (std::size_t n = 2; n <= 4; ++n) {
    const EnumStats s = enumerate_counts({n, Universe::kGeneral, Predicate::kLinkIrregular, {}},
                                         worker_count());
    d << " n" << n << "=" << s.hits << "/" << s.total;
    r.pass = r.pass && s.hits == 0;
  }
  r.detail = d.str();
  return r;
}

Result c2_figure1_pair() {
  const auto [left, right] = figure1_pair();
  const bool li = link_irregular(left);
  const bool ri = link_irregular(right);
  const bool iso = are_isomorphic(left, right);
  const Digraph cyc = Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  const bool link2 = are_isomorphic(link(left, 1), cyc);
  Detail d;
  d << "left irregular=" << li << " right irregular=" << ri << " isomorphic=" << iso
    << " L(2) is 3-cycle=" << link2;
  return {li && ri && !iso && link2, d.str()};
}

Result c3_d6_table() {
  const std::vector<std::vector<std::size_t>> table = {{1, 1, 1, 3, 4}, {1, 1, 2, 2, 4},
                                                       {1, 1, 2, 3, 3}, {0, 2, 2, 3, 3},
                                                       {1, 1, 2, 3, 3}, {1, 2, 2, 2, 3}};
  const LinkProfile p = link_profile(d6());
  std::size_t matched = 0;
  for (Vertex v = 0; v < 6; ++v) {
    std::vector<std::size_t> in;
    for (Vertex w = 0; w < p[v].link.order(); ++w) in.push_back(p[v].link.in_degree(w));
    std::sort(in.begin(), in.end());
    matched += in == table[v];
  }
  auto cycles_at_in2 = [&](Vertex v) -> long {
    const Digraph& l = p[v].link;
    long found = -1;
    for (Vertex w = 0; w < l.order(); ++w)
      if (l.in_degree(w) == 2) {
        if (found != -1) return -2;  // not unique
        found = static_cast<long>(directed_triangles_through(l, w));
      }
    return found;
  };
  const long l3 = cycles_at_in2(2);
  const long l5 = cycles_at_in2(4);
  Detail d;
  d << "multisets matched " << matched << "/6; cycles through in-degree-2 vertex L(3)=" << l3
    << " L(5)=" << l5;
  return {matched == 6 && l3 == 3 && l5 == 1, d.str()};
}

Result c4_tournament_thresholds() {
  const EnumStats five =
      enumerate_counts({5, Universe::kTournaments, Predicate::kLinkIrregular, {}}, worker_count());
  const EnumStats six =
      enumerate_counts({6, Universe::kTournaments, Predicate::kLinkIrregular, {}}, worker_count());
  Detail d;
  d << "n5 hits " << five.hits << "/" << five.total << "; n6 hits " << six.hits << "/" << six.total
    << " (pinned " << kLinkIrregularTournaments6 << ")";
  const bool ok = five.total == 1024 && five.hits == 0 && six.total == 32768 &&
                  six.hits == kLinkIrregularTournaments6;
  return {ok, d.str()};
}

Result c5_extension_chain() {
  const bool d7ok = is_tournament(d7()) && link_irregular(d7());
  const bool d8ok = is_tournament(d8()) && link_irregular(d8());
  const Digraph two_step = extend_dominated(extend_dominating(d7()));
  const Digraph alternating = extend_dominating(d8());
  const std::size_t c_two = conflict_pairs(two_step).count;
  const std::size_t c_alt = conflict_pairs(alternating).count;
  Detail d;
  d << "d7 irregular=" << d7ok << " d8 irregular=" << d8ok
    << "; conflicts extend_dominated(extend_dominating(d7))=" << c_two
    << " extend_dominating(d8)=" << c_alt;
  return {d7ok && d8ok && c_two > 0 && c_alt > 0, d.str()};
}

Result c6_search_sweep() {
  const auto& entries = sweep();
  std::map<std::size_t, bool> found;
  std::size_t runs_found = 0, reverified = 0;
  double slowest_40 = 0;
  for (const auto& e : entries) {
    const bool f = e.report.outcome == Outcome::kFound;
    found[e.n] = found[e.n] || f;
    if (f) {
      ++runs_found;
      reverified += reverify(e.report);
    }
    if (e.n == kSearchMaxOrder) slowest_40 = std::max(slowest_40, e.seconds);
  }
  std::size_t orders_found = 0;
  std::string missing;
  for (const auto& [n, f] : found) {
    orders_found += f;
    if (!f) missing += " " + std::to_string(n);
  }
  Detail d;
  d << "orders with a witness " << orders_found << "/" << found.size() << "; runs found "
    << runs_found << "/" << entries.size() << "; reverified " << reverified << "/" << runs_found
    << "; slowest n=40 seed " << std::fixed << std::setprecision(3) << slowest_40 << " s";
  if (!missing.empty()) d << "; missing:" << missing;
  const bool ok = orders_found == found.size() && reverified == runs_found &&
                  slowest_40 < kLimitC6PerSeedAt40;
  return {ok, d.str()};
}

Result c7_circulants() {
  std::size_t checked = 0, good = 0;
  for (std::size_t n = 3; n <= 10; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      const Digraph c = circulant(n, k);
      ++checked;
      good += is_eulerian(c) && !link_irregular(c) && conflict_pairs(c).count == n * (n - 1) / 2;
    }
  Detail d;
  d << good << "/" << checked << " circulants Eulerian, not irregular, conflicts = C(n,2)";
  return {good == checked, d.str()};
}

Result c8_regular_constructions() {
  const Digraph a = two_out_regular_6();
  bool out2 = true;
  for (Vertex v = 0; v < a.order(); ++v) out2 = out2 && a.out_degree(v) == 2;
  const Digraph b = regular_tournament_9();
  bool reg4 = true;
  for (Vertex v = 0; v < b.order(); ++v)
    reg4 = reg4 && b.out_degree(v) == 4 && b.in_degree(v) == 4;
  const bool ai = link_irregular(a);
  const bool bt = is_tournament(b);
  const bool bi = link_irregular(b);
  Detail d;
  d << "2-out-regular-6: outdegrees 2=" << out2 << " irregular=" << ai
    << "; regular-tournament-9: (4,4)=" << reg4 << " tournament=" << bt << " irregular=" << bi;
  return {out2 && ai && reg4 && bt && bi, d.str()};
}

Result c9_triangle_necessity() {
  Rng rng(make_stream(20240901, 0, 0));
  std::size_t violations = 0, irregular_seen = 0;
  for (std::size_t i = 0; i < kTriangleSamples; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 7);
    const auto universe = uniform_below(rng, 3);  // tournament, oriented, general
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const auto state = universe == 0 ? 1 + uniform_below(rng, 2) : uniform_below(rng, universe == 1 ? 3 : 4);
        if (state == 1 || state == 3) arcs.push_back({u, v});
        if (state == 2 || state == 3) arcs.push_back({v, u});
      }
    const Digraph d = Digraph::from_arcs(n, arcs);
    irregular_seen += link_irregular(d);
    violations += !check_triangle_necessity(d);
  }
  std::size_t corpus_checked = 0;
  for (const auto& c : corpus())
    if (const auto* d = std::get_if<Digraph>(&c.object)) {
      ++corpus_checked;
      violations += !check_triangle_necessity(*d);
    }
  Detail d;
  d << kTriangleSamples << " random digraphs (" << irregular_seen << " link-irregular) + "
    << corpus_checked << " corpus digraphs; violations " << violations;
  return {violations == 0, d.str()};
}

Result c10_bounds() {
  double worst = 0;
  bool h_ok = true;
  for (const auto& f : kFrozenBounds) {
    const BoundReport b = bound_report(f.n);
    worst = std::max(worst, std::abs(b.degree_bound - f.degree_bound));
    worst = std::max(worst, std::abs(b.outdegree_bound - f.degree_bound / 2));
    h_ok = h_ok && b.h == f.h;
  }
  std::size_t witnesses = 0, passing = 0;
  for (const auto& c : corpus())
    if (const auto* d = std::get_if<Digraph>(&c.object); d && link_irregular(*d)) {
      ++witnesses;
      passing += check_bounds(*d);
    }
  for (const auto& e : sweep())
    if (e.report.outcome == Outcome::kFound) {
      ++witnesses;
      passing += check_bounds(Digraph::from_arcs(e.n, e.report.arcs));
    }
  Detail d;
  d << "max |bound - frozen| " << std::scientific << std::setprecision(2) << worst
    << "; h matches=" << h_ok << "; check_bounds " << passing << "/" << witnesses << " witnesses";
  return {worst <= kBoundTolerance && h_ok && passing == witnesses, d.str()};
}

Result c11_labeling() {
  const Counterexample ce = counterexample_graph();
  const bool labeling_ok = verify_labeling(ce.labeling).holds;
  std::size_t orientations = 0, irregular = 0;
  enumerate_orientations(ce.graph, [&](const Digraph& d) {
    ++orientations;
    irregular += link_irregular(d);
  });
  // Every labeled graph on 5 vertices: one bit per pair.
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) pairs.push_back({u, v});
  std::size_t graphs = 0, holds = 0, orientable = 0;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1U) edges.push_back(pairs[i]);
    const UndirectedGraph g = UndirectedGraph::from_edges(5, edges);
    ++graphs;
    const bool o = is_link_irregular_orientable(g).orientable;
    orientable += o;
    holds += !o || admits_link_irregular_labeling(g).holds;
  }
  Detail d;
  d << "stored labeling verifies=" << labeling_ok << "; counterexample orientations irregular "
    << irregular << "/" << orientations << "; implication holds " << holds << "/" << graphs
    << " (" << orientable << " orientable)";
  return {labeling_ok && orientations == 2048 && irregular == 0 && holds == graphs && graphs == 1024,
          d.str()};
}

Result c12_isomorphism_oracle() {
  Rng rng(make_stream(20240902, 0, 0));
  std::size_t agree = 0, forced = 0, positives = 0;
  for (std::size_t i = 0; i < kIsoPairs; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 6);
    const bool digons = coin(rng);
    auto random_digraph = [&] {
      std::vector<Arc> arcs;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          const auto state = uniform_below(rng, digons ? 4 : 3);
          if (state == 1 || state == 3) arcs.push_back({u, v});
          if (state == 2 || state == 3) arcs.push_back({v, u});
        }
      return Digraph::from_arcs(n, arcs);
    };
    const Digraph a = random_digraph();
    Digraph b;
    if (i % 2 == 0) {
      std::vector<Vertex> perm(n);
      for (Vertex v = 0; v < n; ++v) perm[v] = v;
      for (std::size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[uniform_below(rng, k)]);
      b = relabel(a, perm);
      ++forced;
    } else {
      b = random_digraph();
    }
    const bool fast = are_isomorphic(a, b);
    positives += fast;
    bool ok = fast == brute_force_isomorphic(a, b);
    if (ok && fast) {
      const auto w = find_isomorphism(a, b);
      ok = w.has_value() && is_valid_witness(a, b, *w);
    }
    agree += ok;
  }
  Detail d;
  d << "agreement " << agree << "/" << kIsoPairs << " pairs (" << forced << " forced isomorphic, "
    << positives << " isomorphic)";
  return {agree == kIsoPairs && kIsoPairs >= 1000, d.str()};
}

Result c13_determinism() {
  const auto& first = sweep();
  const unsigned jobs = std::max(4U, worker_count());
  const auto second = run_sweep(jobs);
  std::size_t identical = 0;
  for (std::size_t i = 0; i < first.size() && i < second.size(); ++i)
    identical += first[i].serialized == second[i].serialized;
  Detail d;
  d << identical << "/" << first.size() << " SearchReports byte-identical on replay (jobs 1 vs "
    << jobs << ")";
  return {identical == first.size() && second.size() == first.size(), d.str()};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Result()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "nonexistence-below-5", kLimitC1, c1_nonexistence_below_5},
      {2, "figure1-pair", kLimitC2, c2_figure1_pair},
      {3, "d6-link-table", kLimitC3, c3_d6_table},
      {4, "tournament-thresholds", kLimitC4, c4_tournament_thresholds},
      {5, "extension-chain", kLimitC5, c5_extension_chain},
      {6, "search-sweep-6-40", kLimitC6, c6_search_sweep},
      {7, "circulant-non-examples", kLimitC7, c7_circulants},
      {8, "regular-constructions", kLimitC8, c8_regular_constructions},
      {9, "triangle-necessity", kLimitC9, c9_triangle_necessity},
      {10, "degree-bounds", kLimitC10, c10_bounds},
      {11, "labeling-suite", kLimitC11, c11_labeling},
      {12, "isomorphism-oracle", kLimitC12, c12_isomorphism_oracle},
      // Runtime is bounded by criterion 6's budget.
      {13, "search-determinism", kLimitC6, c13_determinism},
  };
  return all;
}

bool run_one(const Criterion& c) {
  const auto t = Clock::now();
  Result r;
  try {
    r = c.run();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double s = seconds_since(t);
  const bool in_time = s < c.limit_seconds;
  const bool pass = r.pass && in_time;
  std::cout << (pass ? "PASS" : "FAIL") << "  C" << std::setw(2) << std::setfill('0') << c.id
            << std::setfill(' ') << " " << c.name << " [" << std::fixed << std::setprecision(3) << s
            << " s / limit " << std::setprecision(0) << c.limit_seconds << " s]: " << r.detail;
  if (!in_time) std::cout << "; over time limit";
  std::cout << std::endl;
  return pass;
}

}  // namespace
}  // namespace linkirr

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-13)")->check(CLI::Range(1, 13));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& c : linkirr::criteria())
    if (only == 0 || only == c.id) all_pass = linkirr::run_one(c) && all_pass;
  return all_pass ? 0 : 1;
}
