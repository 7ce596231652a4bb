#include <benchmark/benchmark.h>

#include <map>

#include "trussdiv/gct_index.hpp"
#include "trussdiv/generators.hpp"
#include "trussdiv/search.hpp"
#include "trussdiv/truss.hpp"
#include "trussdiv/tsd_index.hpp"

namespace {

using namespace trussdiv;

// Holme-Kim graphs with five edges per vertex, cached per size.
const Graph& power_law(std::int64_t n) {
  static std::map<std::int64_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, holme_kim(static_cast<std::size_t>(n), 5, 0.5, 2024)).first;
  return it->second;
}

void set_edges_processed(benchmark::State& state, const Graph& g) {
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.edge_count()));
  state.counters["m"] = static_cast<double>(g.edge_count());
}

void BM_TrussDecompose(benchmark::State& state) {
  const Graph& g = power_law(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truss_decompose(g));
  set_edges_processed(state, g);
}
BENCHMARK(BM_TrussDecompose)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_ExtractAllEgos(benchmark::State& state) {
  const Graph& g = power_law(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extract_all_egos(g));
  set_edges_processed(state, g);
}
BENCHMARK(BM_ExtractAllEgos)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_ExtractEachEgo(benchmark::State& state) {
  const Graph& g = power_law(state.range(0));
  for (auto _ : state) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) benchmark::DoNotOptimize(extract_ego(g, v));
  }
  set_edges_processed(state, g);
}
BENCHMARK(BM_ExtractEachEgo)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_BitmapEgoDecompose(benchmark::State& state) {
  const Graph& g = power_law(state.range(0));
  EgoStore store = extract_all_egos(g);
  std::vector<EgoNetwork> egos;
  for (VertexId v = 0; v < g.vertex_count(); ++v) egos.push_back(store.ego(v));
  for (auto _ : state) {
    for (const auto& ego : egos) benchmark::DoNotOptimize(bitmap_truss_decompose(ego));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * store.total_edges()));
}
BENCHMARK(BM_BitmapEgoDecompose)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BuildTsd(benchmark::State& state) {
  const Graph& g = power_law(state.range(0));
  IndexBuildOptions opts;
  opts.ego_source = state.range(1) == 0 ? EgoSource::kShared : EgoSource::kPerVertex;
  for (auto _ : state) benchmark::DoNotOptimize(build_tsd(g, opts));
  set_edges_processed(state, g);
}
BENCHMARK(BM_BuildTsd)
    ->ArgsProduct({{10000, 50000}, {0, 1}})
    ->ArgNames({"n", "per_vertex"})
    ->Unit(benchmark::kMillisecond);

void BM_BuildGct(benchmark::State& state) {
  const Graph& g = power_law(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_gct(g));
  set_edges_processed(state, g);
}
BENCHMARK(BM_BuildGct)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_OnlineSearch(benchmark::State& state) {
  const Graph& g = power_law(state.range(0));
  SearchOptions opts;
  opts.with_contexts = false;
  for (auto _ : state) benchmark::DoNotOptimize(online_search(g, opts));
}
BENCHMARK(BM_OnlineSearch)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BoundedSearch(benchmark::State& state) {
  const Graph& g = power_law(state.range(0));
  SearchOptions opts;
  opts.with_contexts = false;
  for (auto _ : state) benchmark::DoNotOptimize(bounded_search(g, opts));
}
BENCHMARK(BM_BoundedSearch)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_TsdTopR(benchmark::State& state) {
  static const TsdIndex idx = build_tsd(power_law(50000));
  SearchOptions opts;
  opts.k = static_cast<std::uint32_t>(state.range(0));
  opts.with_contexts = false;
  for (auto _ : state) benchmark::DoNotOptimize(tsd_topr(idx, opts));
}
BENCHMARK(BM_TsdTopR)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_GctTopR(benchmark::State& state) {
  static const GctIndex idx = build_gct(power_law(50000));
  SearchOptions opts;
  opts.k = static_cast<std::uint32_t>(state.range(0));
  opts.with_contexts = false;
  for (auto _ : state) benchmark::DoNotOptimize(gct_topr(idx, opts));
}
BENCHMARK(BM_GctTopR)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

// Scoring every vertex from each index.
void BM_AllScoresTsd(benchmark::State& state) {
  static const TsdIndex idx = build_tsd(power_law(50000));
  for (auto _ : state) {
    std::uint64_t sum = 0;
    for (VertexId v = 0; v < idx.vertex_count(); ++v) sum += tsd_score(idx, v, 3, false).score;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_AllScoresTsd)->Unit(benchmark::kMillisecond);

void BM_AllScoresGct(benchmark::State& state) {
  static const GctIndex idx = build_gct(power_law(50000));
  for (auto _ : state) {
    std::uint64_t sum = 0;
    for (VertexId v = 0; v < idx.vertex_count(); ++v) sum += gct_score(idx, v, 3);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_AllScoresGct)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
