#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "linkirr/arc_list.hpp"
#include "linkirr/constructions.hpp"
#include "linkirr/enumeration.hpp"
#include "linkirr/isomorphism.hpp"
#include "linkirr/labeling.hpp"
#include "linkirr/link.hpp"
#include "linkirr/search.hpp"
#include "linkirr/verification.hpp"
#include "test_util.hpp"

namespace linkirr {
namespace {

TEST(LinkIrregularPair, Properties) {
  const auto [left, right] = figure1_pair();
  EXPECT_TRUE(link_irregular(left));
  EXPECT_TRUE(link_irregular(right));
  EXPECT_FALSE(are_isomorphic(left, right));
  EXPECT_EQ(underlying_graph(left), underlying_graph(right));
  EXPECT_EQ(link(left, 1), test::cycle3());
  EXPECT_EQ(link(left, 0).size(), 1u);
  EXPECT_TRUE(right.has_arc(0, 4));
  EXPECT_TRUE(left.has_arc(4, 0));
}

TEST(DChain, AllLinkIrregularTournaments) {
  for (const Digraph& d : {d6(), d7(), d8()}) {
    EXPECT_TRUE(is_tournament(d));
    EXPECT_TRUE(link_irregular(d));
  }
  EXPECT_EQ(d7(), extend_dominating(d6()));
  EXPECT_EQ(d8(), extend_dominated(d7()));
}

TEST(Circulant, Examples) {
  const Digraph c52 = circulant(5, 2);
  for (Vertex v = 0; v < 5; ++v) {
    EXPECT_EQ(c52.out_degree(v), 2u);
    EXPECT_EQ(c52.in_degree(v), 2u);
  }
  EXPECT_TRUE(is_eulerian(c52));
  EXPECT_FALSE(link_irregular(c52));
  EXPECT_EQ(circulant(3, 1), test::cycle3());
  EXPECT_EQ(conflict_pairs(circulant(6, 2)).count, 15u);
  EXPECT_FALSE(is_oriented(circulant(6, 3)));
  EXPECT_TRUE(is_oriented(circulant(7, 3)));
  EXPECT_THROW(circulant(2, 1), std::invalid_argument);
  EXPECT_THROW(circulant(5, 0), std::invalid_argument);
  EXPECT_THROW(circulant(5, 5), std::invalid_argument);
}

TEST(Circulant, RotationIsAutomorphism) {
  for (std::size_t n = 3; n <= 10; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      const Digraph c = circulant(n, k);
      std::vector<Vertex> rot(n);
      for (Vertex i = 0; i < n; ++i) rot[i] = static_cast<Vertex>((i + 1) % n);
      EXPECT_EQ(relabel(c, rot), c);
      EXPECT_TRUE(is_eulerian(c));
    }
}

TEST(TwoOutRegular6, Properties) {
  const Digraph d = two_out_regular_6();
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(d.out_degree(v), 2u);
  EXPECT_EQ(link(d, 1), test::cycle3());
  EXPECT_TRUE(are_isomorphic(link(d, 3), test::transitive3()));
  EXPECT_TRUE(link_irregular(d));
}

TEST(RegularTournament9, Properties) {
  const Digraph d = regular_tournament_9();
  EXPECT_EQ(d.size(), 36u);
  for (Vertex v = 0; v < 9; ++v) {
    EXPECT_EQ(d.out_degree(v), 4u);
    EXPECT_EQ(d.in_degree(v), 4u);
  }
  EXPECT_TRUE(is_tournament(d));
  EXPECT_EQ(conflict_pairs(d).count, 0u);
}

TEST(Counterexample, Properties) {
  const Counterexample ce = counterexample_graph();
  EXPECT_EQ(ce.graph.order(), 7u);
  EXPECT_EQ(ce.graph.size(), 11u);
  EXPECT_EQ(ce.labeling.base(), ce.graph);
  EXPECT_EQ(ce.labeling.label(3, 5), 2u);
  EXPECT_EQ(ce.labeling.label(5, 6), 2u);
  EXPECT_EQ(ce.labeling.label(0, 1), 1u);
  EXPECT_EQ(undirected_link(ce.graph, 4), test::complete(2));
  EXPECT_EQ(undirected_link(ce.graph, 6), test::complete(2));
  EXPECT_TRUE(verify_labeling(ce.labeling).holds);
  EXPECT_FALSE(is_link_irregular_orientable(ce.graph).orientable);
}

TEST(Wheel, Examples) {
  EXPECT_EQ(wheel(3), test::complete(4));
  EXPECT_THROW(wheel(2), std::invalid_argument);
  for (std::size_t n = 3; n <= 6; ++n)
    EXPECT_FALSE(is_link_irregular_orientable(wheel(n)).orientable) << "W" << n;
  std::size_t count = 0;
  enumerate_orientations(wheel(4), [&](const Digraph&) { ++count; });
  EXPECT_EQ(count, 256u);
}

TEST(Hypercube, Examples) {
  EXPECT_TRUE(are_isomorphic_undirected(hypercube(2), test::cycle(4)));
  EXPECT_EQ(hypercube(1), test::complete(2));
  EXPECT_EQ(hypercube(7).order(), 128u);
  EXPECT_EQ(hypercube(3).size(), 12u);
  EXPECT_FALSE(contains_triangle(hypercube(4)));
  EXPECT_THROW(hypercube(0), std::invalid_argument);
  EXPECT_THROW(hypercube(8), std::invalid_argument);
}

TEST(Corpus, EveryEntrySatisfiesItsProperties) {
  for (const auto& c : corpus()) EXPECT_TRUE(failed_properties(c).empty()) << c.name;
}

TEST(Corpus, RenderRoundTrips) {
  for (const auto& c : corpus()) {
    const std::string text = c.render();
    std::visit(
        [&](const auto& obj) {
          using T = std::decay_t<decltype(obj)>;
          if constexpr (std::is_same_v<T, Digraph>) EXPECT_EQ(parse_digraph(text), obj);
          else if constexpr (std::is_same_v<T, UndirectedGraph>) EXPECT_EQ(parse_undirected(text), obj);
          else EXPECT_EQ(parse_labeled(text), obj);
        },
        c.object);
  }
}

TEST(Corpus, UnknownPropertyFails) {
  NamedConstruction c{"x", d6(), {"tournament", "no-such-property", "out-regular=9"}, {}};
  EXPECT_EQ(failed_properties(c), (std::vector<std::string>{"no-such-property", "out-regular=9"}));
}

TEST(Corpus, LookupAndManifest) {
  EXPECT_TRUE(find_construction("d6").has_value());
  EXPECT_FALSE(find_construction("d5").has_value());
  const std::string manifest = render_manifest();
  EXPECT_NE(manifest.find("d6.dg: tournament link-irregular\n"), std::string::npos);
  EXPECT_EQ(static_cast<std::size_t>(std::count(manifest.begin(), manifest.end(), '\n')),
            corpus().size());
}

TEST(Corpus, ShippedFilesMatchRender) {
  const std::filesystem::path dir = LINKIRR_CORPUS_DIR;
  for (const auto& c : corpus()) EXPECT_EQ(read_text_file(dir / c.file_name()), c.render()) << c.name;
  EXPECT_EQ(read_text_file(dir / "MANIFEST"), render_manifest());
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.is_regular_file();
  EXPECT_EQ(files, corpus().size() + 1);
}

}  // namespace
}  // namespace linkirr
