#include "linkirr/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "linkirr/link.hpp"

namespace linkirr {

namespace {

// Dense cell matrix: cell(u,v) = 0 means "no relation"; any other value is an
// opaque relation kind (arc, edge, edge label).
struct CellMatrix {
  std::size_t n = 0;
  std::vector<std::uint32_t> cells;
  std::vector<std::uint64_t> initial_color;

  std::uint32_t at(std::size_t u, std::size_t v) const { return cells[u * n + v]; }
};

CellMatrix matrix_of(const Digraph& d) {
  CellMatrix m{d.order(), std::vector<std::uint32_t>(d.order() * d.order(), 0), {}};
  for (const auto& a : d.arcs()) m.cells[a.tail * m.n + a.head] = 1;
  m.initial_color.resize(m.n);
  for (Vertex v = 0; v < m.n; ++v) {
    const std::uint64_t digons = (d.out_set(v) & d.in_set(v)).count();
    m.initial_color[v] = (std::uint64_t{d.out_degree(v)} << 40) |
                         (std::uint64_t{d.in_degree(v)} << 32) | (digons << 24) |
                         std::uint64_t{directed_triangles_through(d, v)};
  }
  return m;
}

CellMatrix matrix_of(const UndirectedGraph& g) {
  CellMatrix m{g.order(), std::vector<std::uint32_t>(g.order() * g.order(), 0), {}};
  for (const auto& e : g.edges()) {
    m.cells[e.u * m.n + e.v] = 1;
    m.cells[e.v * m.n + e.u] = 1;
  }
  m.initial_color.resize(m.n);
  for (Vertex v = 0; v < m.n; ++v) {
    std::uint64_t tri = 0;
    g.neighbors(v).for_each([&](Vertex w) { tri += (g.neighbors(v) & g.neighbors(w)).count(); });
    m.initial_color[v] = (std::uint64_t{g.degree(v)} << 32) | tri;
  }
  return m;
}

CellMatrix matrix_of(const LabeledGraph& g) {
  CellMatrix m{g.order(), std::vector<std::uint32_t>(g.order() * g.order(), 0), {}};
  for (const auto& le : g.labeled_edges()) {
    m.cells[le.edge.u * m.n + le.edge.v] = le.label;
    m.cells[le.edge.v * m.n + le.edge.u] = le.label;
  }
  m.initial_color.resize(m.n);
  for (Vertex v = 0; v < m.n; ++v) m.initial_color[v] = g.base().degree(v);
  return m;
}

using Colors = std::vector<std::uint32_t>;

bool same_histogram(const Colors& a, const Colors& b, std::size_t classes) {
  std::vector<std::size_t> ha(classes, 0), hb(classes, 0);
  for (auto c : a) ++ha[c];
  for (auto c : b) ++hb[c];
  return ha == hb;
}

// Joint color refinement of both matrices so that colors are comparable
// across them. Returns false as soon as the color histograms diverge.
bool refine(const CellMatrix& a, const CellMatrix& b, Colors& ca, Colors& cb) {
  std::size_t classes = 0;
  {
    std::map<std::uint64_t, std::uint32_t> ids;
    for (auto c : a.initial_color) ids.emplace(c, 0);
    for (auto c : b.initial_color) ids.emplace(c, 0);
    for (auto& [key, id] : ids) id = static_cast<std::uint32_t>(classes++);
    ca.resize(a.n);
    cb.resize(b.n);
    for (std::size_t v = 0; v < a.n; ++v) ca[v] = ids[a.initial_color[v]];
    for (std::size_t v = 0; v < b.n; ++v) cb[v] = ids[b.initial_color[v]];
  }
  if (!same_histogram(ca, cb, classes)) return false;

  auto key_of = [](const CellMatrix& m, const Colors& c, std::size_t v) {
    std::vector<std::uint64_t> out_part, in_part;
    for (std::size_t u = 0; u < m.n; ++u) {
      if (const auto x = m.at(v, u); x != 0) out_part.push_back((std::uint64_t{x} << 32) | c[u]);
      if (const auto y = m.at(u, v); y != 0) in_part.push_back((std::uint64_t{y} << 32) | c[u]);
    }
    std::sort(out_part.begin(), out_part.end());
    std::sort(in_part.begin(), in_part.end());
    std::vector<std::uint64_t> key;
    key.reserve(out_part.size() + in_part.size() + 3);
    key.push_back(c[v]);
    key.push_back(out_part.size());
    key.insert(key.end(), out_part.begin(), out_part.end());
    key.push_back(in_part.size());
    key.insert(key.end(), in_part.begin(), in_part.end());
    return key;
  };

  while (true) {
    std::vector<std::vector<std::uint64_t>> ka(a.n), kb(b.n);
    for (std::size_t v = 0; v < a.n; ++v) ka[v] = key_of(a, ca, v);
    for (std::size_t v = 0; v < b.n; ++v) kb[v] = key_of(b, cb, v);
    std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
    for (const auto& k : ka) ids.emplace(k, 0);
    for (const auto& k : kb) ids.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = static_cast<std::uint32_t>(next++);
    for (std::size_t v = 0; v < a.n; ++v) ca[v] = ids[ka[v]];
    for (std::size_t v = 0; v < b.n; ++v) cb[v] = ids[kb[v]];
    if (!same_histogram(ca, cb, next)) return false;
    if (next == classes) return true;
    classes = next;
  }
}

class Backtracker {
 public:
  Backtracker(const CellMatrix& a, const CellMatrix& b, const Colors& ca, const Colors& cb)
      : a_(a), b_(b), ca_(ca), cb_(cb), order_(search_order()), image_(a.n, 0), used_(b.n, false) {}

  std::optional<IsoWitness> run() {
    if (!extend(0)) return std::nullopt;
    return IsoWitness{image_};
  }

 private:
  // Most-connected-to-placed first, then smallest color class.
  std::vector<Vertex> search_order() const {
    const std::size_t n = a_.n;
    std::size_t max_color = 0;
    for (auto c : ca_) max_color = std::max<std::size_t>(max_color, c);
    std::vector<std::size_t> class_size(max_color + 1, 0);
    for (auto c : ca_) ++class_size[c];

    std::vector<Vertex> order;
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || links[v] > links[best] ||
            (links[v] == links[best] && class_size[ca_[v]] < class_size[ca_[best]]))
          best = v;
      }
      placed[best] = true;
      order.push_back(static_cast<Vertex>(best));
      for (std::size_t v = 0; v < n; ++v)
        if (!placed[v] && (a_.at(best, v) != 0 || a_.at(v, best) != 0)) ++links[v];
    }
    return order;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    for (std::size_t y = 0; y < b_.n; ++y) {
      if (used_[y] || cb_[y] != ca_[x]) continue;
      if (!consistent(depth, x, static_cast<Vertex>(y))) continue;
      used_[y] = true;
      image_[x] = static_cast<Vertex>(y);
      if (extend(depth + 1)) return true;
      used_[y] = false;
    }
    return false;
  }

  bool consistent(std::size_t depth, Vertex x, Vertex y) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex px = order_[i];
      const Vertex py = image_[px];
      if (a_.at(x, px) != b_.at(y, py) || a_.at(px, x) != b_.at(py, y)) return false;
    }
    return true;
  }

  const CellMatrix& a_;
  const CellMatrix& b_;
  const Colors& ca_;
  const Colors& cb_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

std::optional<IsoWitness> match(const CellMatrix& a, const CellMatrix& b) {
  if (a.n != b.n) return std::nullopt;
  Colors ca, cb;
  if (!refine(a, b, ca, cb)) return std::nullopt;
  return Backtracker(a, b, ca, cb).run();
}

}  // namespace

namespace detail {

std::optional<IsoWitness> match_digraphs(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  return match(matrix_of(a), matrix_of(b));
}

}  // namespace detail

std::optional<IsoWitness> find_isomorphism(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (signature(a) != signature(b)) return std::nullopt;
  return detail::match_digraphs(a, b);
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  return find_isomorphism(a, b).has_value();
}

std::optional<IsoWitness> find_isomorphism(const UndirectedGraph& a, const UndirectedGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  return match(matrix_of(a), matrix_of(b));
}

bool are_isomorphic_undirected(const UndirectedGraph& a, const UndirectedGraph& b) {
  return find_isomorphism(a, b).has_value();
}

std::optional<IsoWitness> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  return match(matrix_of(a), matrix_of(b));
}

bool are_isomorphic_labeled(const LabeledGraph& a, const LabeledGraph& b) {
  return find_isomorphism(a, b).has_value();
}

bool brute_force_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() > kBruteForceMaxOrder || b.order() > kBruteForceMaxOrder)
    throw GraphError(GraphErrorKind::kTooLarge,
                     "brute-force isomorphism is limited to order " +
                         std::to_string(kBruteForceMaxOrder));
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    if (is_valid_witness(a, b, IsoWitness{perm})) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_valid_witness(const Digraph& a, const Digraph& b, const IsoWitness& w) {
  const std::size_t n = a.order();
  if (b.order() != n || a.size() != b.size() || w.mapping.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : w.mapping) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && a.has_arc(u, v) != b.has_arc(w.mapping[u], w.mapping[v])) return false;
  return true;
}

}  // namespace linkirr
