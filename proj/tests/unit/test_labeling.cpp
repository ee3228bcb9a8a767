#include <gtest/gtest.h>

#include "linkirr/constructions.hpp"
#include "linkirr/enumeration.hpp"
#include "linkirr/labeling.hpp"
#include "linkirr/verification.hpp"
#include "test_util.hpp"

namespace linkirr {
namespace {

TEST(Admits, Examples) {
  const PairCheck c4 = admits_link_irregular_labeling(test::cycle(4));
  EXPECT_FALSE(c4.holds);
  ASSERT_TRUE(c4.violation.has_value());
  EXPECT_EQ(*c4.violation, (std::pair<Vertex, Vertex>{0, 1}));
  EXPECT_TRUE(admits_link_irregular_labeling(test::complete(3)).holds);
  EXPECT_TRUE(admits_link_irregular_labeling(counterexample_graph().graph).holds);
}

TEST(Admits, EdgeSetComparisonIsByIdentity) {
  // In K3 all links are K2 (isomorphic) but their edges differ.
  const UndirectedGraph k3 = test::complete(3);
  EXPECT_EQ(link_edge_set(k3, 0), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(link_edge_set(k3, 1), (std::vector<Edge>{{0, 2}}));
}

TEST(Admits, RelabelingInvariant) {
  Rng rng(61);
  for (int iter = 0; iter < 200; ++iter) {
    const UndirectedGraph g = test::random_graph(7, rng);
    const UndirectedGraph h = relabel(g, test::random_permutation(7, rng));
    EXPECT_EQ(admits_link_irregular_labeling(g).holds, admits_link_irregular_labeling(h).holds);
  }
}

TEST(VerifyLabeling, Examples) {
  const Counterexample ce = counterexample_graph();
  EXPECT_TRUE(verify_labeling(ce.labeling).holds);
  EXPECT_FALSE(verify_labeling(LabeledGraph::uniform(test::cycle(4), 1)).holds);
  const PairCheck flat = verify_labeling(LabeledGraph::uniform(ce.graph, 1));
  EXPECT_FALSE(flat.holds);
  ASSERT_TRUE(flat.violation.has_value());
}

TEST(VerifyLabeling, UniformLabelsReduceToUnlabeledLinks) {
  Rng rng(62);
  for (int iter = 0; iter < 200; ++iter) {
    const UndirectedGraph g = test::random_graph(2 + uniform_below(rng, 7), rng, 60);
    bool pairwise_distinct = true;
    for (Vertex x = 0; x < g.order() && pairwise_distinct; ++x)
      for (Vertex y = x + 1; y < g.order(); ++y)
        if (are_isomorphic_undirected(undirected_link(g, x), undirected_link(g, y))) {
          pairwise_distinct = false;
          break;
        }
    EXPECT_EQ(verify_labeling(LabeledGraph::uniform(g, 3)).holds, pairwise_distinct);
  }
}

TEST(LabeledLink, CarriesLabels) {
  const Counterexample ce = counterexample_graph();
  // Vertex 6: neighbors 3 and 5, joined by a label-2 edge.
  const LabeledGraph l = labeled_link(ce.labeling, 6);
  EXPECT_EQ(l.order(), 2u);
  EXPECT_EQ(l.label(0, 1), 2u);
  EXPECT_THROW(labeled_link(ce.labeling, 7), GraphError);
}

TEST(Orientable, Examples) {
  const UndirectedGraph fig1 = underlying_graph(figure1_pair().first);
  const Orientability o = is_link_irregular_orientable(fig1);
  EXPECT_TRUE(o.orientable);
  ASSERT_TRUE(o.witness.has_value());
  EXPECT_TRUE(link_irregular(*o.witness));
  EXPECT_EQ(underlying_graph(*o.witness), fig1);

  const Orientability ce = is_link_irregular_orientable(counterexample_graph().graph);
  EXPECT_FALSE(ce.orientable);
  EXPECT_EQ(ce.orientations_checked, 2048u);

  EXPECT_FALSE(is_link_irregular_orientable(test::path(3)).orientable);
}

TEST(Orientable, WitnessIndependentOfJobs) {
  const UndirectedGraph fig1 = underlying_graph(figure1_pair().first);
  const Orientability a = is_link_irregular_orientable(fig1, 1);
  const Orientability b = is_link_irregular_orientable(fig1, 4);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.orientations_checked, b.orientations_checked);
}

TEST(Orientable, GuardOnEdgeCount) {
  EXPECT_THROW(is_link_irregular_orientable(test::complete(9)), EnumerationError);
  EXPECT_THROW(check_orientable_implies_labelable(test::complete(9)), EnumerationError);
}

TEST(Implication, Examples) {
  EXPECT_TRUE(check_orientable_implies_labelable(underlying_graph(figure1_pair().first)));
  EXPECT_TRUE(admits_link_irregular_labeling(underlying_graph(figure1_pair().first)).holds);
  EXPECT_TRUE(check_orientable_implies_labelable(counterexample_graph().graph));
}

}  // namespace
}  // namespace linkirr
