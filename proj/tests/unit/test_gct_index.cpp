#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"
#include "trussdiv/gct_index.hpp"
#include "trussdiv/index_file.hpp"
#include "trussdiv/tsd_index.hpp"

namespace trussdiv {
namespace {

using testing::Fig1;

TEST(GctIndex, Fig1Center) {
  Graph g = testing::load_fixture("fig1_full.txt");
  GctIndex idx = build_gct(g);
  const VertexId v = testing::id(g, Fig1::v);
  auto nodes = idx.supernodes(v);
  ASSERT_EQ(nodes.size(), 3u);
  for (const auto& s : nodes) EXPECT_EQ(s.tau, 4u);
  ASSERT_EQ(idx.superedges(v).size(), 1u);
  EXPECT_EQ(idx.superedges(v)[0].weight, 3u);
  EXPECT_EQ(gct_score(idx, v, 4), 3u);
  EXPECT_EQ(gct_score(idx, v, 3), 2u);
  EXPECT_EQ(gct_score(idx, v, 5), 0u);
  SocialContexts sc = gct_contexts(idx, v, 4);
  EXPECT_EQ(sc.contexts, (std::vector<Context>{{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12, 13, 14}}));
  EXPECT_EQ(gct_contexts(idx, v, 3).contexts, compute_score(g, v, 3).contexts);
}

TEST(GctIndex, EgoBuilderOnEgoFixture) {
  Graph full = testing::load_fixture("fig1_full.txt");
  EgoNetwork ego = extract_ego(full, testing::id(full, Fig1::v));
  EgoGct gct = build_gct_ego(ego, bitmap_truss_decompose(ego));
  EXPECT_EQ(gct.tau, (std::vector<std::uint32_t>{4, 4, 4}));
  EXPECT_EQ(gct.members[0], (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_EQ(gct.superedges, (std::vector<Superedge>{{0, 1, 3}}));
  EXPECT_THROW(build_gct_ego(ego, TrussMap{}), Error);
}

// A triangle pendant on a K5 ego: the pendant edge's trussness equals the
// smaller supernode's, so it is a superedge with w == min(tau).
TEST(GctIndex, SuperedgeWeightMayEqualSmallerTau) {
  Graph g = graph_from_pairs({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 4},
                              {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  EgoNetwork ego = extract_ego(g, 0);
  EgoGct gct = build_gct_ego(ego, bitmap_truss_decompose(ego));
  GctIndex idx = build_gct(g);
  EXPECT_FALSE(check_gct_invariants(idx).has_value());
  for (std::uint32_t k = 2; k <= 5; ++k) EXPECT_EQ(gct_score(idx, 0, k), compute_score(g, 0, k).score);
  EXPECT_FALSE(gct.superedges.empty());
}

TEST(GctIndexProperty, ScoresAndContextsMatchOnline) {
  for (const auto& [name, g] : testing::random_grid(40, 1103)) {
    SCOPED_TRACE(name);
    GctIndex idx = build_gct(g);
    ASSERT_FALSE(check_gct_invariants(idx).has_value()) << *check_gct_invariants(idx);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (std::uint32_t k = 2; k <= 6; ++k) {
        ScoreRecord expected = compute_score(g, v, k);
        ASSERT_EQ(gct_score(idx, v, k), expected.score);
        EXPECT_EQ(gct_contexts(idx, v, k).contexts, expected.contexts);
      }
    }
  }
}

TEST(GctIndexProperty, InvariantsOnPowerLawGraphs) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GctIndex idx = build_gct(holme_kim(1500, 6, 0.7, seed));
    auto bad = check_gct_invariants(idx);
    EXPECT_FALSE(bad.has_value()) << *bad;
  }
}

TEST(GctIndexProperty, QueryEquivalentToTsd) {
  Graph g = holme_kim(2000, 6, 0.7, 43);
  TsdIndex tsd = build_tsd(g);
  GctIndex gct = build_gct(g);
  for (std::uint32_t k = 2; k <= 6; ++k) {
    SearchOptions opts;
    opts.r = 40;
    opts.k = k;
    EXPECT_EQ(gct_topr(gct, opts).records, tsd_topr(tsd, opts).records) << "k " << k;
  }
}

TEST(GctIndex, StorageNotAboveTsdOnClusteredGraphs) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph g = holme_kim(1500, 6, 0.7, seed);
    EXPECT_LE(build_gct(g).storage(), build_tsd(g).storage());
  }
}

TEST(GctIndex, SaveLoadRoundTrip) {
  Graph g = holme_kim(500, 5, 0.6, 47);
  GctIndex idx = build_gct(g);
  std::stringstream buf;
  save_gct(idx, buf);
  GctIndex back = load_gct(buf);
  ASSERT_EQ(back.vertex_count(), idx.vertex_count());
  EXPECT_EQ(back.storage(), idx.storage());
  for (VertexId v = 0; v < idx.vertex_count(); ++v) {
    ASSERT_EQ(back.supernodes(v).size(), idx.supernodes(v).size());
    for (std::size_t i = 0; i < idx.supernodes(v).size(); ++i) {
      EXPECT_EQ(back.supernodes(v)[i].tau, idx.supernodes(v)[i].tau);
      EXPECT_TRUE(std::ranges::equal(back.members(back.supernodes(v)[i]), idx.members(idx.supernodes(v)[i])));
    }
    EXPECT_TRUE(std::ranges::equal(back.superedges(v), idx.superedges(v)));
    for (std::uint32_t k = 2; k <= 6; ++k) EXPECT_EQ(gct_score(back, v, k), gct_score(idx, v, k));
  }
}

TEST(GctIndex, LoadIndexDispatchesOnFormat) {
  Graph g = testing::load_fixture("fig1_full.txt");
  auto path = std::filesystem::temp_directory_path() / "trussdiv_fig1.gct.json";
  save_gct(build_gct(g), path);
  AnyIndex any = load_index(path);
  ASSERT_TRUE(std::holds_alternative<GctIndex>(any));
  SearchOptions opts;
  opts.r = 1;
  opts.k = 4;
  EXPECT_EQ(query_index(any, opts).records.at(0).contexts.size(), 3u);
}

TEST(GctIndex, LoadRejectsBrokenInvariants) {
  // Overlapping supernodes.
  std::stringstream overlap(
      R"({"format":"gct","version":1,"vertices":[{"id":1,"supernodes":[{"tau":3,"members":[2,3]},{"tau":3,"members":[3,4]}],"superedges":[]},)"
      R"({"id":2,"supernodes":[],"superedges":[]},{"id":3,"supernodes":[],"superedges":[]},{"id":4,"supernodes":[],"superedges":[]}]})");
  EXPECT_THROW(load_gct(overlap), InputError);
  // Superedge heavier than an endpoint.
  std::stringstream heavy(
      R"({"format":"gct","version":1,"vertices":[{"id":1,"supernodes":[{"tau":3,"members":[2]},{"tau":3,"members":[3]}],"superedges":[[0,1,3]]},)"
      R"({"id":2,"supernodes":[],"superedges":[]},{"id":3,"supernodes":[],"superedges":[]}]})");
  EXPECT_THROW(load_gct(heavy), InputError);
  std::stringstream dangling(
      R"({"format":"gct","version":1,"vertices":[{"id":1,"supernodes":[{"tau":3,"members":[2]}],"superedges":[[0,4,2]]},{"id":2,"supernodes":[],"superedges":[]}]})");
  EXPECT_THROW(load_gct(dangling), InputError);
}

TEST(GctIndex, UnknownVertexAndBadK) {
  GctIndex idx = build_gct(complete_graph(5));
  EXPECT_THROW(gct_score(idx, 9, 3), InvalidArgument);
  EXPECT_THROW(gct_score(idx, 0, 1), InvalidArgument);
}

}  // namespace
}  // namespace trussdiv
