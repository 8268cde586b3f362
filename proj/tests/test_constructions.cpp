#include <gtest/gtest.h>

#include "cherry/constructions.hpp"
#include "naive.hpp"

using namespace cherry;

namespace {

std::vector<Edge> edges_of(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }
std::vector<CrossEdge> edges_of(const BipartiteGraph& b) { return {b.edges().begin(), b.edges().end()}; }

// Every valid tuple with r, s <= 8.
std::vector<BipartiteFamilyParams> tuples_up_to(int max_side) {
  std::vector<BipartiteFamilyParams> out;
  for (int r = 1; r <= max_side; ++r)
    for (int s = 1; s <= std::min(r, max_side); ++s)
      for (int l = 0; l <= r; ++l)
        for (int k = 0; k <= std::min(l, s); ++k)
          for (count_t m = static_cast<count_t>(k) * l; m <= static_cast<count_t>(r) * s; ++m)
            out.push_back({r, s, m, l, k});
  return out;
}

}  // namespace

TEST(QuasiClique, Examples) {
  EXPECT_EQ(edges_of(quasi_clique(4, 3)), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(edges_of(quasi_clique(5, 7)),
            (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(quasi_clique(6, 15), Graph(6).complement());
  EXPECT_THROW(quasi_clique(4, 7), std::invalid_argument);
  EXPECT_THROW(quasi_clique(4, -1), std::invalid_argument);
}

TEST(QuasiStar, Examples) {
  EXPECT_EQ(edges_of(quasi_star(5, 4)), (std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(quasi_star(6, 0), Graph(6));
  EXPECT_EQ(quasi_star(6, 15), Graph(6).complement());
  EXPECT_THROW(quasi_star(3, 4), std::invalid_argument);
}

TEST(QuasiFamilies, EdgeCountsComplementAndProfiles) {
  for (int n = 0; n <= 12; ++n)
    for (count_t m = 0; m <= choose2(n); ++m) {
      const auto qc = quasi_clique(n, m);
      const auto qs = quasi_star(n, m);
      ASSERT_EQ(qc.size(), m);
      ASSERT_EQ(qs.size(), m);
      ASSERT_EQ(qs, quasi_clique(n, choose2(n) - m).complement());
      ASSERT_EQ(z1_index(qc), naive::z1_quasi_clique(m));
      ASSERT_EQ(quasi_clique_profile(n, m), profile_of(qc.degrees()));
      ASSERT_EQ(quasi_star_profile(n, m), profile_of(qs.degrees()));
    }
}

TEST(TriangularDecomposition, Bounds) {
  for (count_t m = 0; m < 2000; ++m) {
    const auto t = triangular_decomposition(m);
    ASSERT_EQ(choose2(t.a) + t.b, m);
    ASSERT_GE(t.b, 0);
    ASSERT_LE(t.b, t.a - 1);
  }
}

TEST(AkBipartite, Examples) {
  EXPECT_EQ(edges_of(ak_bipartite(3, 2, 4)), (std::vector<CrossEdge>{{0, 0}, {0, 1}, {1, 0}, {2, 0}}));
  EXPECT_EQ(ak_bipartite(4, 3, 12).size(), 12);
  EXPECT_EQ(z1_index(ak_bipartite(4, 3, 12)), 4 * 9 + 3 * 16);
  EXPECT_EQ(ak_bipartite(4, 3, 0).size(), 0);
  EXPECT_THROW(ak_bipartite(2, 3, 1), std::invalid_argument);
  EXPECT_THROW(ak_bipartite(3, 2, 7), std::invalid_argument);
}

TEST(AkBipartite, DegreeFormula) {
  for (int r = 1; r <= 8; ++r)
    for (int s = 1; s <= r; ++s)
      for (count_t m = 0; m <= r * s; ++m) {
        const auto b = ak_bipartite(r, s, m);
        ASSERT_EQ(b.size(), m);
        ASSERT_EQ(z1_index(b), naive::z1_ak_bipartite(r, m));
      }
}

TEST(B1Family, Examples) {
  const auto b = b1_family({4, 3, 6, 2, 2});
  EXPECT_EQ(edges_of(b), (std::vector<CrossEdge>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {3, 0}}));
  EXPECT_EQ(z1_index(b), 30);
  EXPECT_EQ(2 * 4 + 2 * 6 * 2 - 2 * 4 + naive::z1_ak_bipartite(2, 2), 30);

  const auto tight = b1_family({5, 4, 6, 3, 2});
  for (const auto& e : tight.edges()) {
    EXPECT_LT(e.left, 3);
    EXPECT_LT(e.right, 2);
  }
  EXPECT_EQ(tight.size(), 6);

  EXPECT_THROW(b1_family({4, 3, 9, 2, 2}), infeasible_parameters);  // m > rk
  EXPECT_THROW(b1_family({3, 3, 6, 2, 2}), infeasible_parameters);  // k + l > r
  EXPECT_THROW(b1_family({4, 3, 3, 2, 2}), infeasible_parameters);  // m < kl
}

TEST(B2Family, Examples) {
  const auto b = b2_family({3, 3, 6, 2, 2});
  EXPECT_EQ(edges_of(b), (std::vector<CrossEdge>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}}));
  EXPECT_EQ(z1_index(b), 30);
  EXPECT_EQ(8 + 24 - 8 + naive::z1_ak_bipartite(2, 2), 30);
  EXPECT_EQ(b2_family({3, 3, 4, 2, 2}).size(), 4);
  EXPECT_THROW(b2_family({4, 3, 6, 2, 2}), infeasible_parameters);
}

TEST(B1Family, MatchesLiteralDefinitionBelowFullBlock) {
  for (const auto& p : tuples_up_to(8)) {
    if (p.m > static_cast<count_t>(p.r) * p.k || p.k + p.l > p.r || p.r == p.l) continue;
    const auto g = b1_family(p);
    const count_t pp = (p.m - static_cast<count_t>(p.k) * p.l) / (p.r - p.l);
    if (pp < p.k) {
      ASSERT_EQ(edges_of(g), naive::literal_b1(p.r, p.l, p.k, p.m))
          << p.r << ' ' << p.s << ' ' << p.m << ' ' << p.l << ' ' << p.k;
    }
  }
}

TEST(BipartiteFamilies, FactIdentitiesAndWitnesses) {
  int b1 = 0, b2 = 0;
  for (const auto& p : tuples_up_to(8)) {
    if (p.m > static_cast<count_t>(p.r) * p.k) continue;
    const count_t head = static_cast<count_t>(p.l) * p.k * p.k + 2 * p.m * p.l -
                         static_cast<count_t>(p.k) * p.l * p.l;
    const count_t rest = p.m - static_cast<count_t>(p.k) * p.l;
    BipartiteGraph g;
    count_t expected = 0;
    if (p.k + p.l <= p.r) {
      if (p.r == p.l) continue;
      g = b1_family(p);
      expected = head + naive::z1_ak_bipartite(p.r - p.l, rest);
      ++b1;
    } else {
      g = b2_family(p);
      expected = head + naive::z1_ak_bipartite(p.k, rest);
      ++b2;
    }
    ASSERT_EQ(g.size(), p.m);
    ASSERT_EQ(z1_index(g), expected) << p.r << ' ' << p.s << ' ' << p.m << ' ' << p.l << ' ' << p.k;
    ASSERT_TRUE(witness_holds(g, Side::left, left_block_witness(p)));
    for (int i = 0; i < p.l; ++i)
      for (int j = 0; j < p.k; ++j) ASSERT_TRUE(g.has_edge(i, j));
  }
  EXPECT_GT(b1, 100);
  EXPECT_GT(b2, 100);
}

TEST(BipartiteFamilies, BoundaryAgreesWithAkBipartite) {
  for (const auto& p : tuples_up_to(8)) {
    if (p.m != static_cast<count_t>(p.r) * p.k || p.r == p.l) continue;
    const auto g = p.k + p.l <= p.r ? b1_family(p) : b2_family(p);
    ASSERT_EQ(z1_index(g), z1_index(ak_bipartite(p.r, p.s, p.m)));
  }
}

TEST(G1Family, Example) {
  const auto g = g1_family(8, 5, 2, 2);
  EXPECT_EQ(edges_of(g), (std::vector<Edge>{{0, 1}, {0, 6}, {0, 7}, {1, 6}, {1, 7}}));
  const auto w = g1_witness(8, 2, 2);
  EXPECT_EQ(w.vertices, (std::vector<vertex_t>{6, 7}));
  EXPECT_TRUE(witness_holds(g, w));
}

TEST(G1Family, PureBlockAndCollisions) {
  const auto g = g1_family(7, 6, 3, 2);
  EXPECT_EQ(g.size(), 6);
  for (const auto& e : g.edges()) EXPECT_TRUE(e.u < 2 && e.v >= 4);
  EXPECT_THROW(g1_family(4, 4, 2, 3), std::invalid_argument);
  EXPECT_THROW(g1_family(5, 10, 2, 2), index_collision);
  EXPECT_THROW(g1_family(5, 3, 2, 2), infeasible_parameters);
}

TEST(G2Family, Example) {
  const auto g = g2_family(6, 5, 2, 2);
  EXPECT_EQ(edges_of(g), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  const auto w = g2_witness(g2_plan(6, 5, 2, 2));
  EXPECT_EQ(w.vertices, (std::vector<vertex_t>{2, 3}));
  EXPECT_TRUE(witness_holds(g, w));
}

TEST(G2Family, RemainderPolicy) {
  // m = 2*1 + C(1,2) + 2 with a = 1, l = 2: b = 2 > a
  const auto plan = g2_plan(8, 4, 2, 1, RemainderPolicy::split);
  EXPECT_TRUE(plan.spills());
  EXPECT_THROW(g2_family(8, 4, 2, 1), infeasible_parameters);
  const auto g = g2_family(8, 4, 2, 1, RemainderPolicy::split);
  EXPECT_EQ(g.size(), 4);
  EXPECT_TRUE(witness_holds(g, g2_witness(plan)));
  EXPECT_THROW(g2_family(6, 5, 2, 3), infeasible_parameters);
  EXPECT_THROW(g2_family(4, 6, 2, 2), index_collision);
}

TEST(GeneralFamilies, ExhaustiveSmallOrders) {
  int g1_built = 0, g2_built = 0;
  for (int n = 1; n <= 12; ++n)
    for (count_t m = 0; m <= choose2(n); ++m)
      for (int l = 0; l <= n; ++l)
        for (int k = 0; k <= n; ++k) {
          try {
            const auto plan = g1_plan(n, m, l, k);
            const auto g = g1_family(n, m, l, k);
            ASSERT_EQ(g.size(), m);
            ASSERT_TRUE(witness_holds(g, g1_witness(n, l, k)));
            ASSERT_EQ(g1_profile(plan), profile_of(g.degrees()));
            ++g1_built;
          } catch (const infeasible_parameters&) {
          }
          for (auto policy : {RemainderPolicy::strict, RemainderPolicy::split}) {
            try {
              const auto plan = g2_plan(n, m, l, k, policy);
              const auto g = g2_family(n, m, l, k, policy);
              ASSERT_EQ(g.size(), m);
              ASSERT_TRUE(witness_holds(g, g2_witness(plan)));
              ASSERT_EQ(g2_profile(plan), profile_of(g.degrees()));
              ASSERT_EQ(profile_z1(g2_profile(plan)), z1_index(g));
              ++g2_built;
            } catch (const infeasible_parameters&) {
            }
          }
        }
  EXPECT_GT(g1_built, 1000);
  EXPECT_GT(g2_built, 1000);
}

TEST(Profiles, LargeOrderArithmetic) {
  const count_t n = 2'000'000;
  const count_t m = choose2(n) / 2;
  const auto qs = quasi_star_profile(n, m);
  EXPECT_EQ(profile_order(qs), n);
  EXPECT_EQ(profile_edges(qs), m);
  EXPECT_EQ(profile_z1(qs), 2 * profile_cherries(qs) + 2 * m);
}
