#include "linkirr/verification.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace linkirr {

ConflictReport conflict_pairs(const LinkProfile& profile) {
  const std::size_t n = profile.size();
  std::vector<Vertex> by_sig(n);
  std::iota(by_sig.begin(), by_sig.end(), Vertex{0});
  std::stable_sort(by_sig.begin(), by_sig.end(),
                   [&](Vertex a, Vertex b) { return profile[a].sig < profile[b].sig; });

  ConflictReport report;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && profile[by_sig[end]].sig == profile[by_sig[start]].sig) ++end;
    if (end - start > 1) {
      // Partition the signature group into isomorphism classes.
      std::vector<std::vector<Vertex>> classes;
      for (std::size_t i = start; i < end; ++i) {
        const Vertex v = by_sig[i];
        bool placed = false;
        for (auto& cls : classes) {
          if (detail::match_digraphs(profile[cls.front()].link, profile[v].link)) {
            cls.push_back(v);
            placed = true;
            break;
          }
        }
        if (!placed) classes.push_back({v});
      }
      for (auto& cls : classes) {
        std::sort(cls.begin(), cls.end());
        for (std::size_t i = 0; i < cls.size(); ++i)
          for (std::size_t j = i + 1; j < cls.size(); ++j) report.pairs.emplace_back(cls[i], cls[j]);
      }
    }
    start = end;
  }
  std::sort(report.pairs.begin(), report.pairs.end());
  report.count = report.pairs.size();
  return report;
}

ConflictReport conflict_pairs(const Digraph& d, const ConflictOptions& options) {
  const LinkProfile profile = link_profile(d);
  if (options.verify_prefilter) {
    for (Vertex u = 0; u < profile.size(); ++u)
      for (Vertex v = u + 1; v < profile.size(); ++v)
        if (profile[u].sig != profile[v].sig &&
            detail::match_digraphs(profile[u].link, profile[v].link))
          throw PrefilterViolation("signatures differ but links of " + std::to_string(u) +
                                   " and " + std::to_string(v) + " are isomorphic");
  }
  return conflict_pairs(profile);
}

bool link_irregular(const Digraph& d) {
  if (d.order() < 2) return false;
  const LinkProfile profile = link_profile(d);
  std::vector<const Signature*> sigs;
  sigs.reserve(profile.size());
  for (const auto& e : profile) sigs.push_back(&e.sig);
  std::vector<Vertex> by_sig(profile.size());
  std::iota(by_sig.begin(), by_sig.end(), Vertex{0});
  std::sort(by_sig.begin(), by_sig.end(),
            [&](Vertex a, Vertex b) { return *sigs[a] < *sigs[b]; });
  for (std::size_t i = 0; i < by_sig.size(); ++i)
    for (std::size_t j = i + 1; j < by_sig.size() && *sigs[by_sig[j]] == *sigs[by_sig[i]]; ++j)
      if (detail::match_digraphs(profile[by_sig[i]].link, profile[by_sig[j]].link)) return false;
  return true;
}

Certificate is_link_irregular(const Digraph& d) {
  Certificate cert;
  const LinkProfile profile = link_profile(d);
  for (const auto& e : profile) cert.profile.push_back({e.link.order(), e.link.size()});
  cert.underlying_edges = underlying_graph(d).size();
  if (d.order() >= 3) cert.planar_edge_limit = 3 * d.order() - 6;
  if (d.order() < 2) {
    cert.verdict = Verdict::kNotIrregular;
    return cert;
  }
  for (Vertex u = 0; u < profile.size(); ++u) {
    for (Vertex v = u + 1; v < profile.size(); ++v) {
      if (profile[u].sig != profile[v].sig) continue;
      if (auto iso = detail::match_digraphs(profile[u].link, profile[v].link)) {
        cert.verdict = Verdict::kNotIrregular;
        cert.witness = LinkWitness{u, v, std::move(*iso)};
        return cert;
      }
    }
  }
  cert.verdict = Verdict::kIrregular;
  return cert;
}

BoundReport bound_report(std::size_t n) {
  if (n == 0) throw std::invalid_argument("bound_report needs n >= 1");
  if (n > kBoundMaxOrder) throw std::invalid_argument("bound_report: n too large");
  const auto floor_log2 = static_cast<std::size_t>(std::bit_width(n) - 1);
  std::size_t h = 1;
  while ((h + 1) * h <= floor_log2) ++h;

  std::int64_t numerator = static_cast<std::int64_t>(h) * static_cast<std::int64_t>(n);
  for (std::size_t d = 1; d < h; ++d) {
    const std::size_t exponent = d * (d - 1);  // 2 * C(d, 2), zero for d < 2
    numerator -= static_cast<std::int64_t>(h - d) * (std::int64_t{1} << exponent);
  }
  BoundReport r;
  r.n = n;
  r.h = h;
  r.numerator = numerator;
  r.degree_bound = static_cast<double>(numerator) / static_cast<double>(n);
  r.outdegree_bound = r.degree_bound / 2.0;
  return r;
}

bool check_bounds(const Digraph& d) {
  if (d.order() == 0) return false;
  const BoundReport r = bound_report(d.order());
  const auto n = static_cast<std::int64_t>(d.order());
  bool degree_ok = false;
  bool outdegree_ok = false;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (static_cast<std::int64_t>(d.degree(v)) * n >= r.numerator) degree_ok = true;
    if (2 * static_cast<std::int64_t>(d.out_degree(v)) * n >= r.numerator) outdegree_ok = true;
  }
  return degree_ok && outdegree_ok;
}

bool check_triangle_necessity(const Digraph& d) {
  return !link_irregular(d) || contains_triangle(underlying_graph(d));
}

}  // namespace linkirr
