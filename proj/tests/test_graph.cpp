#include <gtest/gtest.h>

#include <random>

#include "cherry/graph.hpp"
#include "cherry/io.hpp"
#include "naive.hpp"

using namespace cherry;

TEST(Graph, TriangleCounts) {
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(k3.size(), 3);
  EXPECT_EQ(count_cherries(k3), 3);
  EXPECT_EQ(z1_index(k3), 12);
}

TEST(Graph, StarCounts) {
  const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(count_cherries(star), 6);
  EXPECT_EQ(z1_index(star), 20);
}

TEST(Graph, EdgesAreNormalized) {
  const Graph g(4, {{3, 1}, {2, 0}});
  ASSERT_EQ(g.size(), 2);
  EXPECT_EQ(g.edges()[0], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 3}));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(-1), std::invalid_argument);
  EXPECT_THROW(Graph(kMaxOrder + 1), std::length_error);
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(BipartiteGraph(2, 2, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST(Graph, IdentityOnRandomGraphs) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> order(0, 12);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = naive::random_graph(rng, order(rng), prob(rng));
    const auto a = naive::adjacency(g);
    ASSERT_EQ(count_cherries(g), naive::cherries(a));
    ASSERT_EQ(z1_index(g), naive::z1(a));
    ASSERT_EQ(z1_index(g), 2 * count_cherries(g) + 2 * g.size());
    ASSERT_EQ(cherries_from_z1(z1_index(g), g.size()), count_cherries(g));
    ASSERT_EQ(z1_from_cherries(count_cherries(g), g.size()), z1_index(g));
  }
}

TEST(Graph, BipartiteMatchesUnderlyingGraph) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = naive::random_bipartite(rng, 1 + trial % 6, 1 + trial % 5, 0.5);
    const auto g = b.to_graph();
    EXPECT_EQ(z1_index(b), z1_index(g));
    EXPECT_EQ(count_cherries(b), count_cherries(g));
    EXPECT_EQ(z1_index(b.transposed()), z1_index(b));
  }
}

TEST(Graph, ComplementAndRelabel) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 9;
    const auto g = naive::random_graph(rng, n, 0.4);
    const auto c = g.complement();
    EXPECT_EQ(g.size() + c.size(), choose2(n));
    EXPECT_EQ(c.complement(), g);
    std::vector<vertex_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(z1_index(g.relabeled(perm)), z1_index(g));
  }
}

TEST(Graph, Densities) {
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto d = densities(k3);
  EXPECT_EQ(d.edge, Rational::make(1, 1));
  EXPECT_EQ(d.cherry, Rational::make(1, 1));
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(densities(path).edge, Rational::make(1, 2));
  EXPECT_EQ(densities(path).cherry, Rational::make(2, 12));
  EXPECT_THROW(edge_density(1, 0), undefined_density);
  EXPECT_THROW(cherry_density(2, 0), undefined_density);
}

TEST(Graph, RationalOrdering) {
  EXPECT_LT(Rational::make(1, 3), Rational::make(1, 2));
  EXPECT_EQ(Rational::make(2, 4), Rational::make(1, 2));
  EXPECT_EQ(Rational::make(0, 5), Rational::make(0, 1));
  EXPECT_THROW(Rational::make(1, 0), std::invalid_argument);
}

TEST(Graph, MinDegreeOverSet) {
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const std::vector<vertex_t> set{0, 2};
  EXPECT_EQ(min_degree_over_set(star, set), 1);
  EXPECT_THROW(min_degree_over_set(star, {}), std::invalid_argument);
}

TEST(Graph, WitnessSearchAgreesWithBruteForce) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const auto g = naive::random_graph(rng, n, 0.35);
    const auto a = naive::adjacency(g);
    for (int l = 0; l <= n; ++l)
      for (int k = 0; k <= 3; ++k) {
        const auto w = find_constraint_witness(g, l, k);
        ASSERT_EQ(w.has_value(), naive::has_witness(a, l, k)) << "n=" << n << " l=" << l << " k=" << k;
        if (w) {
          EXPECT_TRUE(witness_holds(g, *w));
        }
      }
  }
}

TEST(Graph, WitnessCapIsEnforced) {
  const Graph complete = Graph(12).complement();
  EXPECT_THROW(find_constraint_witness(complete, 6, 0, 10), cap_exceeded);
}

TEST(Graph, BipartiteWitness) {
  const BipartiteGraph b(3, 2, {{0, 0}, {0, 1}, {1, 0}});
  EXPECT_TRUE(witness_holds(b, Side::left, {{0, 1}, 2, 1}));
  EXPECT_FALSE(witness_holds(b, Side::left, {{0, 2}, 2, 1}));
  EXPECT_FALSE(witness_holds(b, Side::left, {{0, 0}, 2, 1}));
  EXPECT_TRUE(witness_holds(b, Side::right, {{0}, 1, 2}));
}

TEST(Io, RoundTrip) {
  const Graph g(5, {{0, 3}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(graph_from_json(to_json(g)), g);
  const BipartiteGraph b(4, 3, {{0, 2}, {1, 0}, {1, 1}});
  EXPECT_EQ(bipartite_from_json(to_json(b)), b);
  EXPECT_TRUE(std::holds_alternative<BipartiteGraph>(any_graph_from_json(to_json(b))));
  EXPECT_THROW(any_graph_from_json(json{{"edges", json::array()}}), std::invalid_argument);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n":3,"edges":[[0]]})")), std::invalid_argument);
}
