#include "trussdiv/search.hpp"

#include <chrono>
#include <string>
#include <unordered_set>

#include "trussdiv/parallel.hpp"
#include "trussdiv/truss.hpp"

namespace trussdiv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

void check_r(std::size_t r, std::size_t n) {
  if (n == 0) return;
  if (r < 1 || r > n) {
    throw InvalidArgument("r must be in [1, " + std::to_string(n) + "] (got " + std::to_string(r) + ")");
  }
}

Graph sparsify(const Graph& g, std::uint32_t k) {
  check_k(k);
  const TrussMap tmap = truss_decompose(g);
  std::vector<bool> keep(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) keep[e] = tmap[e] >= k + 1;
  return g.edge_subgraph(keep);
}

namespace detail {

void pad_with_zero(TopRResult& result, std::span<const ExternalId> universe, std::size_t r, std::uint32_t k) {
  if (result.records.size() >= r) return;
  std::unordered_set<ExternalId> taken;
  for (const auto& rec : result.records) taken.insert(rec.vertex);
  for (ExternalId id : universe) {
    if (result.records.size() >= r) break;
    if (taken.count(id) != 0) continue;
    ScoreRecord rec;
    rec.vertex = id;
    rec.k = k;
    rec.padded = true;
    result.records.push_back(std::move(rec));
  }
}

}  // namespace detail

TopRResult online_search(const Graph& g, const SearchOptions& opts) {
  const auto start = Clock::now();
  check_k(opts.k);
  check_r(opts.r, g.vertex_count());
  TopRResult result;
  if (g.vertex_count() == 0) return result;

  std::vector<std::uint32_t> scores(g.vertex_count(), 0);
  parallel_for(g.vertex_count(), opts.threads, [&](std::size_t v) {
    scores[v] = compute_score(g, static_cast<VertexId>(v), opts.k, false).score;
  });
  result.search_space = g.vertex_count();

  std::vector<VertexId> order;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (scores[v] > 0) order.push_back(v);
  }
  // Internal id order equals external id order.
  auto before = [&scores](VertexId a, VertexId b) { return scores[a] != scores[b] ? scores[a] > scores[b] : a < b; };
  const std::size_t take = std::min(opts.r, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(), before);
  order.resize(take);

  result.records.resize(take);
  parallel_for(take, opts.threads, [&](std::size_t i) {
    if (opts.with_contexts) {
      result.records[i] = compute_score(g, order[i], opts.k, true);
    } else {
      result.records[i] = {g.external_id(order[i]), opts.k, scores[order[i]], {}, false};
    }
  });
  if (opts.pad_with_zero) detail::pad_with_zero(result, g.external_ids(), opts.r, opts.k);
  result.seconds = seconds_since(start);
  result.phases.score = result.seconds;
  return result;
}

TopRResult bounded_search(const Graph& g, const SearchOptions& opts) {
  const auto start = Clock::now();
  check_k(opts.k);
  check_r(opts.r, g.vertex_count());
  if (g.vertex_count() == 0) return {};

  const Graph reduced = sparsify(g, opts.k);
  const double sparsify_seconds = seconds_since(start);
  const auto bound_start = Clock::now();
  const auto ego_edges = vertex_triangle_counts(reduced);
  std::vector<detail::Candidate> candidates;
  candidates.reserve(reduced.vertex_count());
  for (VertexId v = 0; v < reduced.vertex_count(); ++v) {
    candidates.push_back({upper_bound_score(reduced.degree(v), ego_edges[v], opts.k), reduced.external_id(v), v});
  }

  const double bound_seconds = seconds_since(bound_start);

  const auto score_start = Clock::now();
  TopRResult result = detail::pruned_top_r(candidates, opts.r, [&](VertexId v) {
    return compute_score(reduced, v, opts.k, opts.with_contexts);
  });
  if (opts.pad_with_zero) detail::pad_with_zero(result, g.external_ids(), opts.r, opts.k);
  result.phases = {sparsify_seconds, bound_seconds, seconds_since(score_start)};
  result.seconds = seconds_since(start);
  return result;
}

}  // namespace trussdiv
