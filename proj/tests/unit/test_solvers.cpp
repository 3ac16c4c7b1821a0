#include <gtest/gtest.h>

#include <random>

#include "degseq/graph.hpp"
#include "degseq/solvers.hpp"
#include "naive.hpp"

using degseq::Graph;

namespace {

Graph g2_family(int r) {
  const int pairs = r * (r + 1) / 2;
  Graph g = degseq::complete_graph(r + 1).disjoint_union(Graph(2 * pairs));
  for (int i = 0; i < pairs; ++i) g.add_edge(r + 1 + 2 * i, r + 2 + 2 * i);
  return g;
}

}  // namespace

TEST(Domination, Examples) {
  EXPECT_EQ(degseq::domination_number(degseq::cycle_graph(6)).value, 2);
  EXPECT_EQ(degseq::domination_number(degseq::star_graph(4)).value, 1);
  EXPECT_EQ(degseq::domination_number(g2_family(2)).value, 4);
  EXPECT_EQ(degseq::domination_number(degseq::path_graph(7)).value, 3);
}

TEST(Independence, Examples) {
  EXPECT_EQ(degseq::independence_number(degseq::path_graph(4)).value, 2);
  EXPECT_EQ(degseq::independence_number(Graph(5)).value, 5);
  Graph stars = degseq::star_graph(2).disjoint_union(degseq::star_graph(2)).disjoint_union(degseq::star_graph(2));
  EXPECT_EQ(degseq::independence_number(stars).value, 6);
}

TEST(Clique, Examples) {
  EXPECT_EQ(degseq::clique_number(degseq::complete_graph(4)).value, 4);
  EXPECT_EQ(degseq::clique_number(degseq::cycle_graph(5)).value, 2);
  EXPECT_EQ(degseq::clique_number(degseq::complete_graph(3).disjoint_union(degseq::complete_graph(3))).value, 3);
  EXPECT_EQ(degseq::clique_number(Graph(3)).value, 1);
}

TEST(Solvers, WitnessSetsAreValid) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 14;
    Graph g = naive::random_graph(n, 0.3, rng);
    auto dom = degseq::domination_number(g);
    auto ind = degseq::independence_number(g);
    auto cl = degseq::clique_number(g);
    EXPECT_EQ(static_cast<int>(dom.vertices.size()), dom.value);
    EXPECT_TRUE(degseq::is_dominating(g, dom.vertices));
    EXPECT_EQ(static_cast<int>(ind.vertices.size()), ind.value);
    EXPECT_TRUE(degseq::is_independent(g, ind.vertices));
    EXPECT_EQ(static_cast<int>(cl.vertices.size()), cl.value);
    EXPECT_TRUE(degseq::is_independent(g.complement(), cl.vertices));
  }
}

TEST(Solvers, AgreeWithSubsetEnumerationOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    naive::for_each_graph(n, [&](const naive::Adj& a) {
      Graph g = a.to_graph();
      EXPECT_EQ(degseq::domination_number(g).value, naive::domination(a));
      EXPECT_EQ(degseq::independence_number(g).value, naive::independence(a));
      EXPECT_EQ(degseq::clique_number(g).value, naive::clique_number(a));
    });
  }
}

TEST(Solvers, AgreeWithSubsetEnumerationOnRandomGraphs) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 6 + trial % 9;
    const double p = 0.1 + 0.1 * (trial % 7);
    Graph g = naive::random_graph(n, p, rng);
    naive::Adj a(g);
    EXPECT_EQ(degseq::domination_number(g).value, naive::domination(a));
    EXPECT_EQ(degseq::independence_number(g).value, naive::independence(a));
    EXPECT_EQ(degseq::clique_number(g).value, naive::clique_number(a));
  }
}

TEST(Solvers, SizeLimit) {
  Graph big(40);
  EXPECT_THROW(degseq::domination_number(big), degseq::Error);
  EXPECT_EQ(degseq::domination_number(big, {.max_vertices = 64}).value, 40);
  EXPECT_EQ(degseq::independence_number(degseq::cycle_graph(60), {.max_vertices = 64}).value, 30);
  EXPECT_EQ(degseq::domination_number(degseq::cycle_graph(60), {.max_vertices = 64}).value, 20);
}

TEST(Predicates, DominatingAndIndependent) {
  Graph p = degseq::path_graph(4);
  EXPECT_TRUE(degseq::is_dominating(p, std::vector<int>{1, 2}));
  EXPECT_FALSE(degseq::is_dominating(p, std::vector<int>{0}));
  EXPECT_TRUE(degseq::is_independent(p, std::vector<int>{0, 2}));
  EXPECT_FALSE(degseq::is_independent(p, std::vector<int>{0, 1}));
}
