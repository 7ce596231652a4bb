#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trussdiv/diversity.hpp"
#include "trussdiv/graph.hpp"

namespace trussdiv {

struct SearchOptions {
  std::size_t r = 100;
  std::uint32_t k = 3;
  bool with_contexts = true;
  // Fill the answer up to r with zero-score vertices (smallest ids first).
  bool pad_with_zero = false;
  unsigned threads = 1;
};

// Wall time of the stages of one query, in seconds.
struct PhaseTimes {
  double sparsify = 0.0;
  double bound = 0.0;
  double score = 0.0;
};

/// Answer of a top-r query, best first: score descending, then external
/// id ascending. Only vertices with score >= 1 are admitted unless
/// padding was requested.
struct TopRResult {
  std::vector<ScoreRecord> records;
  // Vertices whose exact score had to be computed.
  std::size_t search_space = 0;
  double seconds = 0.0;
  PhaseTimes phases;
};

// Total order of answers: higher score first, then smaller external id.
inline bool ranks_before(const ScoreRecord& a, const ScoreRecord& b) {
  return a.score != b.score ? a.score > b.score : a.vertex < b.vertex;
}

// Throws InvalidArgument unless 1 <= r <= n (any r is accepted on an empty graph).
void check_r(std::size_t r, std::size_t n);

// Keeps the edges with global trussness >= k + 1; an edge below that is in
// no k-truss of any ego-network. Isolated vertices are dropped.
Graph sparsify(const Graph& g, std::uint32_t k);

// Scores every vertex.
TopRResult online_search(const Graph& g, const SearchOptions& opts);

// Sparsifies, orders vertices by the degree/edge upper bound and stops as
// soon as no remaining vertex can enter the answer.
TopRResult bounded_search(const Graph& g, const SearchOptions& opts);

namespace detail {

struct Candidate {
  std::uint32_t bound;
  ExternalId id;
  VertexId vertex;
};

/// Bound-ordered top-r loop shared by the pruned searches. Candidates are
/// visited by (bound desc, id asc); the loop ends at the first candidate
/// that cannot outrank the current r-th answer. `score(vertex)` returns the
/// exact record.
template <class ScoreFn>
TopRResult pruned_top_r(std::span<const Candidate> candidates, std::size_t r, ScoreFn&& score) {
  TopRResult result;
  std::uint32_t max_bound = 0;
  for (const auto& c : candidates) max_bound = std::max(max_bound, c.bound);
  std::vector<std::vector<Candidate>> buckets(static_cast<std::size_t>(max_bound) + 1);
  for (const auto& c : candidates) {
    if (c.bound > 0) buckets[c.bound].push_back(c);
  }

  std::vector<ScoreRecord>& best = result.records;
  for (std::uint32_t b = max_bound; b > 0; --b) {
    auto& bucket = buckets[b];
    std::sort(bucket.begin(), bucket.end(), [](const Candidate& x, const Candidate& y) { return x.id < y.id; });
    for (const auto& c : bucket) {
      if (best.size() == r) {
        const ScoreRecord& worst = best.back();
        if (b < worst.score || (b == worst.score && c.id > worst.vertex)) return result;
      }
      ScoreRecord rec = score(c.vertex);
      ++result.search_space;
      if (rec.score == 0) continue;
      if (best.size() == r && !ranks_before(rec, best.back())) continue;
      auto pos = std::upper_bound(best.begin(), best.end(), rec, ranks_before);
      best.insert(pos, std::move(rec));
      if (best.size() > r) best.pop_back();
    }
  }
  return result;
}

// Appends zero-score records for the smallest ids of `universe` (ascending)
// that are not yet in the result, until it holds r records.
void pad_with_zero(TopRResult& result, std::span<const ExternalId> universe, std::size_t r, std::uint32_t k);

}  // namespace detail

}  // namespace trussdiv
