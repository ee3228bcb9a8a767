#include "linkirr/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "linkirr/verification.hpp"

namespace linkirr {

namespace {

struct Layout {
  std::vector<Edge> pairs;
  unsigned first_state = 0;  // lowest state digit in use
  unsigned radix = 0;
  std::size_t n = 0;
};

Layout layout_of(const EnumSpec& spec) {
  Layout l;
  if (spec.universe == Universe::kOrientationsOf) {
    if (!spec.base) throw EnumerationError("orientations-of universe needs a base graph");
    if (spec.base->size() > kMaxOrientationEdges)
      throw EnumerationError("base graph has " + std::to_string(spec.base->size()) +
                             " edges; the limit is " + std::to_string(kMaxOrientationEdges));
    l.n = spec.base->order();
    l.pairs = spec.base->edges();
  } else {
    if (spec.n > kMaxOrder) throw EnumerationError("order exceeds the supported maximum");
    l.n = spec.n;
    for (Vertex u = 0; u < spec.n; ++u)
      for (Vertex v = u + 1; v < spec.n; ++v) l.pairs.push_back({u, v});
  }
  switch (spec.universe) {
    case Universe::kTournaments:
    case Universe::kOrientationsOf:
      l.first_state = 1;
      l.radix = 2;
      break;
    case Universe::kOriented:
      l.first_state = 0;
      l.radix = 3;
      break;
    case Universe::kGeneral:
      l.first_state = 0;
      l.radix = 4;
      break;
  }
  return l;
}

std::uint64_t checked_size(const Layout& l) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < l.pairs.size(); ++i) {
    if (size > kMaxUniverseSize / l.radix)
      throw EnumerationError("universe exceeds the 2^32 guard");
    size *= l.radix;
  }
  return size;
}

Digraph decode(const Layout& l, std::uint64_t index) {
  DigraphBuilder b(l.n);
  // Last pair is least significant.
  for (std::size_t i = l.pairs.size(); i-- > 0;) {
    const unsigned state = l.first_state + static_cast<unsigned>(index % l.radix);
    index /= l.radix;
    const Edge& p = l.pairs[i];
    if (state == 1 || state == 3) b.add_arc(p.u, p.v);
    if (state == 2 || state == 3) b.add_arc(p.v, p.u);
  }
  return std::move(b).build();
}

bool evaluate(Predicate p, const Digraph& d) {
  switch (p) {
    case Predicate::kAll:
      return true;
    case Predicate::kLinkIrregular:
      return link_irregular(d);
  }
  return false;
}

}  // namespace

std::uint64_t universe_size(const EnumSpec& spec) { return checked_size(layout_of(spec)); }

Digraph object_at(const EnumSpec& spec, std::uint64_t index) {
  const Layout l = layout_of(spec);
  if (index >= checked_size(l)) throw EnumerationError("index outside the universe");
  return decode(l, index);
}

EnumStats enumerate_range(const EnumSpec& spec, std::uint64_t first, std::uint64_t last,
                          const EnumVisitor& visit) {
  const Layout l = layout_of(spec);
  const std::uint64_t size = checked_size(l);
  last = std::min(last, size);
  EnumStats stats;
  for (std::uint64_t i = first; i < last; ++i) {
    const Digraph d = decode(l, i);
    const bool hit = evaluate(spec.predicate, d);
    ++stats.total;
    if (hit) ++stats.hits;
    if (visit) visit(d, hit);
  }
  return stats;
}

EnumStats enumerate(const EnumSpec& spec, const EnumVisitor& visit) {
  return enumerate_range(spec, 0, universe_size(spec), visit);
}

void enumerate_orientations(const UndirectedGraph& g,
                            const std::function<void(const Digraph&)>& visit) {
  EnumSpec spec{g.order(), Universe::kOrientationsOf, Predicate::kAll, g};
  enumerate(spec, [&](const Digraph& d, bool) { visit(d); });
}

EnumStats enumerate_counts(const EnumSpec& spec, unsigned jobs) {
  const std::uint64_t size = universe_size(spec);
  jobs = std::max(1U, jobs);
  if (jobs == 1) return enumerate_range(spec, 0, size, nullptr);

  const std::uint64_t chunks = std::min<std::uint64_t>(size, std::uint64_t{jobs} * 16);
  const std::uint64_t step = (size + chunks - 1) / chunks;
  std::vector<EnumStats> partial(chunks);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::uint64_t c = next++; c < chunks; c = next++)
        partial[c] = enumerate_range(spec, c * step, std::min(size, (c + 1) * step), nullptr);
    });
  }
  workers.clear();
  EnumStats total;
  for (const auto& p : partial) {
    total.total += p.total;
    total.hits += p.hits;
  }
  return total;
}

std::uint64_t count_link_irregular(const EnumSpec& spec, unsigned jobs) {
  EnumSpec s = spec;
  s.predicate = Predicate::kLinkIrregular;
  return enumerate_counts(s, jobs).hits;
}

std::optional<std::uint64_t> find_first_index(std::uint64_t count, unsigned jobs,
                                              const std::function<bool(std::uint64_t)>& pred) {
  jobs = std::max(1U, jobs);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> found{count};
  auto work = [&] {
    for (std::uint64_t i = next++; i < count && i < found.load(); i = next++) {
      if (!pred(i)) continue;
      std::uint64_t cur = found.load();
      while (i < cur && !found.compare_exchange_weak(cur, i)) {
      }
    }
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(work);
  }
  const std::uint64_t result = found.load();
  if (result == count) return std::nullopt;
  return result;
}

std::string_view to_string(Universe u) {
  switch (u) {
    case Universe::kTournaments:
      return "tournaments";
    case Universe::kOriented:
      return "oriented";
    case Universe::kGeneral:
      return "general";
    case Universe::kOrientationsOf:
      return "orientations-of";
  }
  return "?";
}

std::string_view to_string(Predicate p) {
  return p == Predicate::kAll ? "all" : "link-irregular";
}

std::optional<Universe> parse_universe(std::string_view s) {
  for (auto u : {Universe::kTournaments, Universe::kOriented, Universe::kGeneral,
                 Universe::kOrientationsOf})
    if (s == to_string(u)) return u;
  return std::nullopt;
}

std::optional<Predicate> parse_predicate(std::string_view s) {
  for (auto p : {Predicate::kAll, Predicate::kLinkIrregular})
    if (s == to_string(p)) return p;
  return std::nullopt;
}

}  // namespace linkirr
