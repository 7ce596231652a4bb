#include <gtest/gtest.h>

#include "test_support.hpp"
#include "trussdiv/ego.hpp"
#include "trussdiv/truss.hpp"

namespace trussdiv {
namespace {

using testing::Fig1;

TEST(Ego, FixtureEgoOfV) {
  Graph full = testing::load_fixture("fig1_full.txt");
  Graph ego_graph = testing::load_fixture("fig1_ego.txt");
  EgoNetwork ego = extract_ego(full, testing::id(full, Fig1::v));
  EXPECT_EQ(ego.member_count(), 14u);
  ASSERT_EQ(ego.edge_count(), ego_graph.edge_count());
  for (std::size_t i = 0; i < ego.edge_count(); ++i) {
    const auto& le = ego.edges[i];
    EXPECT_EQ(full.external_id(ego.members[le.a]), ego_graph.external_id(ego_graph.edge(i).u));
    EXPECT_EQ(full.external_id(ego.members[le.b]), ego_graph.external_id(ego_graph.edge(i).v));
  }
}

TEST(Ego, DecompositionOfVEgoMatchesStandaloneGraph) {
  Graph full = testing::load_fixture("fig1_full.txt");
  Graph ego_graph = testing::load_fixture("fig1_ego.txt");
  EgoNetwork ego = extract_ego(full, testing::id(full, Fig1::v));
  EXPECT_EQ(bitmap_truss_decompose(ego).trussness, truss_decompose(ego_graph).trussness);
}

// tau is not symmetric across egos: (v, r2) has trussness 3 in ego(r1)
// while (r1, r2) has trussness 4 in ego(v).
TEST(Ego, NonSymmetricTrussness) {
  Graph full = testing::load_fixture("fig1_full.txt");
  const VertexId v = testing::id(full, Fig1::v);
  const VertexId r1 = testing::id(full, Fig1::r(1));
  const VertexId r2 = testing::id(full, Fig1::r(2));

  EgoNetwork ego_r1 = extract_ego(full, r1);
  TrussMap t_r1 = bitmap_truss_decompose(ego_r1);
  EgoNetwork ego_v = extract_ego(full, v);
  TrussMap t_v = bitmap_truss_decompose(ego_v);

  auto local = [](const EgoNetwork& ego, VertexId g) {
    return static_cast<std::uint32_t>(std::lower_bound(ego.members.begin(), ego.members.end(), g) -
                                      ego.members.begin());
  };
  auto tau = [&](const EgoNetwork& ego, const TrussMap& t, VertexId a, VertexId b) {
    LocalEdge key{local(ego, a), local(ego, b)};
    if (key.a > key.b) std::swap(key.a, key.b);
    auto it = std::lower_bound(ego.edges.begin(), ego.edges.end(), key);
    EXPECT_TRUE(it != ego.edges.end() && *it == key);
    return t[static_cast<std::size_t>(it - ego.edges.begin())];
  };
  EXPECT_EQ(tau(ego_r1, t_r1, v, r2), 3u);
  EXPECT_EQ(tau(ego_v, t_v, r1, r2), 4u);
}

TEST(Ego, StarCenterHasNoEgoEdges) {
  Graph g = star_graph(6);
  EgoNetwork ego = extract_ego(g, 0);
  EXPECT_EQ(ego.member_count(), 6u);
  EXPECT_EQ(ego.edge_count(), 0u);
  EXPECT_EQ(bitmap_truss_decompose(ego).size(), 0u);
}

TEST(Ego, OutOfRangeVertex) {
  Graph g = path_graph(3);
  EXPECT_THROW(extract_ego(g, 5), InvalidArgument);
}

TEST(EgoProperty, SharedExtractionMatchesPerVertex) {
  auto grid = testing::random_grid(30, 401);
  grid.push_back({"holme_kim", holme_kim(1500, 6, 0.6, 5)});
  grid.push_back({"fig1", testing::load_fixture("fig1_full.txt")});
  for (const auto& [name, g] : grid) {
    SCOPED_TRACE(name);
    EgoStore store = extract_all_egos(g);
    EXPECT_EQ(store.total_edges(), 3 * stats(g).triangles);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      EgoNetwork a = extract_ego(g, v);
      EgoNetwork b = store.ego(v);
      EXPECT_EQ(a.members, b.members);
      EXPECT_EQ(a.edges, b.edges);
    }
  }
}

TEST(EgoProperty, EgoEdgeCountIsTriangleCount) {
  Graph g = holme_kim(800, 5, 0.5, 9);
  auto counts = vertex_triangle_counts(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(extract_ego(g, v).edge_count(), counts[v]);
}

TEST(Ego, MemoryCapExceeded) {
  Graph g = complete_graph(30);
  try {
    extract_all_egos(g, 1024);
    FAIL() << "expected ResourceCapError";
  } catch (const ResourceCapError& e) {
    EXPECT_NE(std::string(e.what()).find("ego materialization too large"), std::string::npos);
  }
}

TEST(Ego, MemoryCapFromEnvironment) {
  ::setenv("TRUSSDIV_MEM_CAP_MB", "7", 1);
  EXPECT_EQ(default_memory_cap_bytes(), 7u << 20);
  ::unsetenv("TRUSSDIV_MEM_CAP_MB");
  EXPECT_EQ(default_memory_cap_bytes(), std::size_t{4096} << 20);
}

}  // namespace
}  // namespace trussdiv
