#include <gtest/gtest.h>

#include "test_support.hpp"
#include "trussdiv/truss.hpp"

namespace trussdiv {
namespace {

using testing::Fig1;

std::uint32_t truss_of(const Graph& g, const TrussMap& tmap, ExternalId a, ExternalId b) {
  auto e = g.find_edge(testing::id(g, a), testing::id(g, b));
  EXPECT_TRUE(e.has_value());
  return tmap[*e];
}

// Triangles of edge e inside the subgraph of edges with keep set.
std::uint32_t support_within(const Graph& g, EdgeId e, const std::vector<bool>& keep) {
  std::uint32_t count = 0;
  const Edge& uv = g.edge(e);
  for_each_common(g.neighbors(uv.u), g.neighbors(uv.v), [&](VertexId, std::size_t i, std::size_t j) {
    if (keep[g.incident_edges(uv.u)[i]] && keep[g.incident_edges(uv.v)[j]]) ++count;
  });
  return count;
}

TEST(Truss, CompleteGraph) {
  for (std::size_t n = 3; n <= 8; ++n) {
    Graph g = complete_graph(n);
    TrussMap t = truss_decompose(g);
    for (auto tau : t.trussness) EXPECT_EQ(tau, n);
  }
}

TEST(Truss, TreesAndCycles) {
  for (auto g : {path_graph(6), star_graph(5), cycle_graph(6)}) {
    TrussMap t = truss_decompose(g);
    for (auto tau : t.trussness) EXPECT_EQ(tau, 2u);
  }
}

TEST(Truss, Octahedron) {
  TrussMap t = truss_decompose(octahedron_graph());
  ASSERT_EQ(t.size(), 12u);
  for (auto tau : t.trussness) EXPECT_EQ(tau, 4u);
}

TEST(Truss, EgoFixture) {
  Graph g = testing::load_fixture("fig1_ego.txt");
  TrussMap t = truss_decompose(g);
  EXPECT_EQ(truss_of(g, t, Fig1::x(2), Fig1::x(4)), 4u);
  EXPECT_EQ(truss_of(g, t, Fig1::x(2), Fig1::y(1)), 3u);
  EXPECT_EQ(truss_of(g, t, Fig1::x(4), Fig1::y(1)), 3u);
  EXPECT_EQ(truss_of(g, t, Fig1::r(1), Fig1::r(2)), 4u);
  EXPECT_EQ(t.max(), 4u);
}

TEST(Truss, FullFixture) {
  Graph g = testing::load_fixture("fig1_full.txt");
  TrussMap t = truss_decompose(g);
  EXPECT_EQ(truss_of(g, t, Fig1::x(2), Fig1::y(1)), 4u);
  EXPECT_EQ(truss_of(g, t, Fig1::v, Fig1::x(1)), 5u);
  EXPECT_EQ(truss_of(g, t, Fig1::r(1), Fig1::r(2)), 5u);
  EXPECT_EQ(truss_of(g, t, Fig1::v, Fig1::r(3)), 5u);
}

TEST(Truss, SupportCountsTriangles) {
  Graph g = testing::load_fixture("fig1_full.txt");
  SupportMap s = compute_support(g);
  std::uint64_t total = 0;
  for (auto x : s.support) total += x;
  EXPECT_EQ(total, 3 * stats(g).triangles);
}

TEST(Truss, EmptyGraph) {
  Graph g;
  EXPECT_EQ(truss_decompose(g).size(), 0u);
  EXPECT_EQ(truss_decompose(g).max(), 0u);
}

TEST(TrussProperty, MatchesOracleOnRandomGraphs) {
  for (const auto& [name, g] : testing::random_grid(70)) {
    SCOPED_TRACE(name);
    auto expected = oracle::oracle_truss(g);
    EXPECT_EQ(testing::by_pair(g, truss_decompose(g)), expected);
  }
}

TEST(TrussProperty, TieOrderIndependent) {
  for (const auto& [name, g] : testing::random_grid(40, 101)) {
    SCOPED_TRACE(name);
    EXPECT_EQ(truss_decompose(g, TieOrder::kAscending).trussness,
              truss_decompose(g, TieOrder::kDescending).trussness);
  }
  Graph hk = holme_kim(3000, 6, 0.7, 3);
  EXPECT_EQ(truss_decompose(hk, TieOrder::kAscending).trussness,
            truss_decompose(hk, TieOrder::kDescending).trussness);
}

// Every edge of T_k = {e : tau(e) >= k} lies in >= k-2 triangles of T_k,
// and T_k is maximal: no edge outside it can be added back on its own.
TEST(TrussProperty, KTrussAndMaximality) {
  for (const auto& [name, g] : testing::random_grid(30, 211)) {
    SCOPED_TRACE(name);
    TrussMap t = truss_decompose(g);
    for (std::uint32_t k = 3; k <= t.max() + 1; ++k) {
      std::vector<bool> keep(g.edge_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e) keep[e] = t[e] >= k;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (keep[e]) {
          EXPECT_GE(support_within(g, e, keep), k - 2);
        } else {
          auto plus = keep;
          plus[e] = true;
          EXPECT_LT(support_within(g, e, plus), k - 2) << "edge " << e << " k " << k;
        }
      }
    }
  }
}

TEST(TrussProperty, BitmapMatchesOracleOnEgos) {
  for (const auto& [name, g] : testing::random_grid(30, 307)) {
    SCOPED_TRACE(name);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      EgoNetwork ego = extract_ego(g, v);
      oracle::OracleEgo expected = oracle::oracle_ego(g, v);
      ASSERT_EQ(ego.members, expected.members);
      EXPECT_EQ(testing::by_pair(ego, bitmap_truss_decompose(ego)), expected.trussness);
    }
  }
}

TEST(TrussProperty, BitmapTieOrderIndependent) {
  Graph g = holme_kim(1500, 8, 0.8, 11);
  for (VertexId v = 0; v < g.vertex_count(); v += 7) {
    EgoNetwork ego = extract_ego(g, v);
    EXPECT_EQ(bitmap_truss_decompose(ego, TieOrder::kAscending).trussness,
              bitmap_truss_decompose(ego, TieOrder::kDescending).trussness);
  }
}

TEST(Truss, VertexTrussness) {
  Graph g = testing::load_fixture("fig1_ego.txt");
  TrussMap t = truss_decompose(g);
  auto tau = vertex_trussness<Edge>(g.vertex_count(), g.edges(), t);
  EXPECT_EQ(tau[testing::id(g, Fig1::x(1))], 4u);
  EXPECT_EQ(tau[testing::id(g, Fig1::r(1))], 4u);
}

}  // namespace
}  // namespace trussdiv
