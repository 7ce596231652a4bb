#pragma once

// Slow reference implementations, written straight from the definitions.
// They use only the Graph container (vertex ids and adjacency lists) and
// none of the decomposition, ego or index code they are compared with.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "trussdiv/diversity.hpp"
#include "trussdiv/graph.hpp"
#include "trussdiv/search.hpp"

namespace trussdiv::oracle {

inline constexpr std::size_t kDefaultVertexCap = 200;

// Trussness keyed by internal (u, v), u < v.
using EdgeTrussness = std::map<std::pair<VertexId, VertexId>, std::uint32_t>;

// For k = 3, 4, ... delete edges with fewer than k - 2 triangles in the
// remaining graph until none is left to delete; an edge's trussness is the
// last k it survived. Throws InvalidArgument when n exceeds `vertex_cap`.
EdgeTrussness oracle_truss(const Graph& g, std::size_t vertex_cap = kDefaultVertexCap);

// Ego-network built by testing every pair of neighbours, then decomposed
// with the definitional peel above.
struct OracleEgo {
  VertexId center = kNoVertex;
  std::vector<VertexId> members;  // global ids
  EdgeTrussness trussness;        // keyed by member positions
};

OracleEgo oracle_ego(const Graph& g, VertexId v, std::size_t vertex_cap = kDefaultVertexCap);

// Flood fill over the ego edges with trussness >= k.
ScoreRecord oracle_score(const Graph& g, const OracleEgo& ego, std::uint32_t k);
ScoreRecord oracle_score(const Graph& g, VertexId v, std::uint32_t k, std::size_t vertex_cap = kDefaultVertexCap);

// Scores every vertex and sorts; positive scores only.
TopRResult oracle_topr(const Graph& g, std::size_t r, std::uint32_t k, std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace trussdiv::oracle
