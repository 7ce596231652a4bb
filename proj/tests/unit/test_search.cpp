#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "trussdiv/digest.hpp"
#include "trussdiv/gct_index.hpp"
#include "trussdiv/search.hpp"
#include "trussdiv/tsd_index.hpp"

namespace trussdiv {
namespace {

using testing::Fig1;

std::vector<std::pair<ExternalId, std::uint32_t>> ranking(const TopRResult& r) {
  std::vector<std::pair<ExternalId, std::uint32_t>> out;
  for (const auto& rec : r.records) out.emplace_back(rec.vertex, rec.score);
  return out;
}

std::vector<std::pair<ExternalId, std::uint32_t>> read_golden(const std::string& name) {
  std::ifstream in(testing::fixture(name));
  std::vector<std::pair<ExternalId, std::uint32_t>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    ExternalId v;
    std::uint32_t s;
    ss >> v >> s;
    out.emplace_back(v, s);
  }
  return out;
}

// All four algorithms on the same query.
std::vector<TopRResult> run_all(const Graph& g, const SearchOptions& opts) {
  TsdIndex tsd = build_tsd(g);
  GctIndex gct = build_gct(g);
  return {online_search(g, opts), bounded_search(g, opts), tsd_topr(tsd, opts), gct_topr(gct, opts)};
}

TEST(Search, Fig1TopOne) {
  Graph g = testing::load_fixture("fig1_full.txt");
  SearchOptions opts;
  opts.r = 1;
  opts.k = 4;
  for (const auto& res : run_all(g, opts)) {
    ASSERT_EQ(res.records.size(), 1u);
    EXPECT_EQ(res.records[0].vertex, Fig1::v);
    EXPECT_EQ(res.records[0].score, 3u);
    EXPECT_EQ(res.records[0].contexts.size(), 3u);
  }
}

TEST(Search, Fig1BoundedSearchSpace) {
  Graph g = testing::load_fixture("fig1_full.txt");
  SearchOptions opts;
  opts.r = 1;
  opts.k = 4;
  TopRResult res = bounded_search(g, opts);
  EXPECT_EQ(res.search_space, 1u);
  EXPECT_EQ(online_search(g, opts).search_space, g.vertex_count());
}

TEST(Search, Fig1FullRankingGolden) {
  Graph g = testing::load_fixture("fig1_full.txt");
  SearchOptions opts;
  opts.r = g.vertex_count();
  opts.k = 4;
  auto golden = read_golden("fig1_full.ranking_k4.tsv");
  ASSERT_EQ(golden.size(), 9u);
  for (const auto& res : run_all(g, opts)) EXPECT_EQ(ranking(res), golden);
}

TEST(Search, Fig1KThreeRanking) {
  Graph g = testing::load_fixture("fig1_full.txt");
  SearchOptions opts;
  opts.r = 15;
  opts.k = 3;
  std::vector<std::pair<ExternalId, std::uint32_t>> expected = {{0, 2}};
  for (ExternalId x = 1; x <= 14; ++x) expected.emplace_back(x, 1);
  for (const auto& res : run_all(g, opts)) EXPECT_EQ(ranking(res), expected);
}

TEST(Search, NoPositiveScoreGivesEmptyAnswer) {
  Graph g = testing::load_fixture("fig1_full.txt");
  SearchOptions opts;
  opts.r = 5;
  opts.k = 99;
  for (const auto& res : run_all(g, opts)) EXPECT_TRUE(res.records.empty());
}

TEST(Search, PaddingWithZeroScores) {
  Graph g = testing::load_fixture("fig1_full.txt");
  SearchOptions opts;
  opts.r = 12;
  opts.k = 4;
  opts.pad_with_zero = true;
  for (const auto& res : run_all(g, opts)) {
    ASSERT_EQ(res.records.size(), 12u);
    EXPECT_EQ(res.records[8].vertex, 8u);
    EXPECT_FALSE(res.records[8].padded);
    for (std::size_t i = 9; i < 12; ++i) {
      EXPECT_TRUE(res.records[i].padded);
      EXPECT_EQ(res.records[i].score, 0u);
      EXPECT_EQ(res.records[i].vertex, i);
    }
  }
}

TEST(Search, InvalidRAndK) {
  Graph g = testing::load_fixture("fig1_full.txt");
  SearchOptions opts;
  opts.r = 0;
  EXPECT_THROW(online_search(g, opts), InvalidArgument);
  EXPECT_THROW(bounded_search(g, opts), InvalidArgument);
  opts.r = 16;
  EXPECT_THROW(online_search(g, opts), InvalidArgument);
  opts.r = 3;
  opts.k = 1;
  EXPECT_THROW(bounded_search(g, opts), InvalidArgument);
  EXPECT_THROW(tsd_topr(build_tsd(g), opts), InvalidArgument);
  EXPECT_THROW(gct_topr(build_gct(g), opts), InvalidArgument);
}

TEST(Search, EmptyGraph) {
  Graph g;
  SearchOptions opts;
  opts.r = 10;
  for (const auto& res : run_all(g, opts)) EXPECT_TRUE(res.records.empty());
}

// An equal-score vertex with a smaller id can still displace the current
// r-th answer, so the loop may not stop at bound == worst score.
TEST(Search, PrunedLoopKeepsTieOrder) {
  std::vector<detail::Candidate> candidates = {{3, 9, 0}, {2, 4, 1}, {1, 2, 2}};
  std::vector<std::uint32_t> scores = {2, 2, 1};
  std::vector<ExternalId> ids = {9, 4, 2};
  auto score = [&](VertexId v) {
    ScoreRecord rec;
    rec.vertex = ids[v];
    rec.score = scores[v];
    return rec;
  };
  TopRResult res = detail::pruned_top_r(std::span<const detail::Candidate>(candidates), 1, score);
  ASSERT_EQ(res.records.size(), 1u);
  EXPECT_EQ(res.records[0].vertex, 4u);
  EXPECT_EQ(res.search_space, 2u);
}

TEST(Search, SparsifyKeepsHighTrussEdges) {
  Graph g = testing::load_fixture("fig1_full.txt");
  Graph s = sparsify(g, 4);
  // The bridges (x2,y1) and (x4,y1) have global trussness 4 and go.
  EXPECT_EQ(s.edge_count(), g.edge_count() - 2);
  EXPECT_EQ(sparsify(g, 5).edge_count(), 0u);
}

TEST(SearchProperty, AllAlgorithmsMatchOracle) {
  for (const auto& [name, g] : testing::random_grid(70, 809)) {
    SCOPED_TRACE(name);
    for (std::uint32_t k : {2u, 3u, 4u}) {
      for (std::size_t r : {std::size_t{1}, std::min<std::size_t>(5, g.vertex_count()), g.vertex_count()}) {
        SearchOptions opts;
        opts.r = r;
        opts.k = k;
        TopRResult expected = oracle::oracle_topr(g, r, k);
        for (const auto& res : run_all(g, opts)) {
          EXPECT_EQ(res.records, expected.records) << "k " << k << " r " << r;
        }
      }
    }
  }
}

TEST(SearchProperty, SparsificationPreservesScores) {
  auto grid = testing::random_grid(20, 907);
  grid.push_back({"holme_kim", holme_kim(1500, 6, 0.7, 17)});
  for (const auto& [name, g] : grid) {
    SCOPED_TRACE(name);
    for (std::uint32_t k : {3u, 4u, 5u}) {
      Graph s = sparsify(g, k);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ScoreRecord full = compute_score(g, v, k);
        auto sv = s.internal_id(g.external_id(v));
        if (!sv) {
          EXPECT_EQ(full.score, 0u);
          continue;
        }
        EXPECT_EQ(compute_score(s, *sv, k), full);
      }
    }
  }
}

TEST(SearchProperty, ThreadCountDoesNotChangeAnswer) {
  Graph g = holme_kim(3000, 6, 0.7, 23);
  SearchOptions one;
  one.r = 50;
  one.k = 3;
  SearchOptions many = one;
  many.threads = 8;
  EXPECT_EQ(result_digest(online_search(g, one)), result_digest(online_search(g, many)));
  EXPECT_EQ(online_search(g, one).records, online_search(g, many).records);

  IndexBuildOptions b1;
  IndexBuildOptions b8;
  b8.threads = 8;
  EXPECT_EQ(result_digest(tsd_topr(build_tsd(g, b1), one)), result_digest(tsd_topr(build_tsd(g, b8), one)));
  EXPECT_EQ(result_digest(gct_topr(build_gct(g, b1), one)), result_digest(gct_topr(build_gct(g, b8), one)));
}

// The forest bound is usually, not always, tighter than the degree bound
// on the sparsified graph, so only the online comparison is strict here.
TEST(SearchProperty, SearchSpaceOrdering) {
  Graph g = holme_kim(3000, 5, 0.6, 29);
  SearchOptions opts;
  opts.r = 20;
  opts.k = 3;
  TopRResult online = online_search(g, opts);
  TopRResult bounded = bounded_search(g, opts);
  TopRResult tsd = tsd_topr(build_tsd(g), opts);
  EXPECT_EQ(online.search_space, g.vertex_count());
  EXPECT_LE(bounded.search_space, online.search_space);
  EXPECT_LE(tsd.search_space, online.search_space);
  EXPECT_EQ(online.records, bounded.records);
  EXPECT_EQ(online.records, tsd.records);
}

TEST(Search, DigestIgnoresContextsAndTimes) {
  Graph g = testing::load_fixture("fig1_full.txt");
  SearchOptions with;
  with.r = 5;
  with.k = 4;
  SearchOptions without = with;
  without.with_contexts = false;
  TopRResult a = online_search(g, with);
  TopRResult b = bounded_search(g, without);
  EXPECT_EQ(result_digest(a), result_digest(b));
  EXPECT_EQ(result_digest(a).size(), 16u);
  TopRResult c = a;
  c.records.pop_back();
  EXPECT_NE(result_digest(a), result_digest(c));
}

}  // namespace
}  // namespace trussdiv
