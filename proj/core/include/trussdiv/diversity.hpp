#pragma once

#include <cstdint>
#include <vector>

#include "trussdiv/ego.hpp"
#include "trussdiv/graph.hpp"
#include "trussdiv/truss.hpp"

namespace trussdiv {

// Member external ids of one social context, ascending.
using Context = std::vector<ExternalId>;

// Maximal connected k-trusses of one ego-network. Contexts are sorted by
// their smallest member.
struct SocialContexts {
  ExternalId center = 0;
  std::uint32_t k = 0;
  std::vector<Context> contexts;
};

struct ScoreRecord {
  ExternalId vertex = 0;
  std::uint32_t k = 0;
  std::uint32_t score = 0;
  // Filled only when contexts were requested.
  std::vector<Context> contexts;
  // Zero-score entry used to fill a result up to r.
  bool padded = false;

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

// Throws InvalidArgument unless k >= 2.
void check_k(std::uint32_t k);

// Sorts each context and the context list into canonical order.
void canonicalize(std::vector<Context>& contexts);

// Extract, decompose, drop edges with trussness < k, count components.
ScoreRecord compute_score(const Graph& g, VertexId v, std::uint32_t k, bool with_contexts = true);

// Same as compute_score with the ego-network and its trussness given.
ScoreRecord score_ego(const Graph& g, const EgoNetwork& ego, const TrussMap& tmap, std::uint32_t k,
                      bool with_contexts);

SocialContexts social_contexts(const Graph& g, VertexId v, std::uint32_t k);

// min(floor(d / k), floor(2 m_v / (k (k - 1)))): a context is a k-truss,
// which needs at least k vertices and k(k-1)/2 edges.
std::uint32_t upper_bound_score(std::size_t degree, std::uint64_t ego_edges, std::uint32_t k);
std::uint32_t upper_bound_score(const Graph& g, VertexId v, std::uint32_t k);

}  // namespace trussdiv
