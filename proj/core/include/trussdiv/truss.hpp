#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "trussdiv/ego.hpp"
#include "trussdiv/graph.hpp"

namespace trussdiv {

// Triangles containing each edge, indexed by edge id.
struct SupportMap {
  std::vector<std::uint32_t> support;
};

// Trussness per edge, indexed by edge id of the graph (or position in the
// ego edge list) it was computed for.
struct TrussMap {
  std::vector<std::uint32_t> trussness;

  std::size_t size() const { return trussness.size(); }
  std::uint32_t operator[](std::size_t e) const { return trussness[e]; }
  std::uint32_t max() const {
    return trussness.empty() ? 0 : *std::max_element(trussness.begin(), trussness.end());
  }
};

// Order in which equal-support edges leave the peeling queue. Final
// trussness never depends on it.
enum class TieOrder { kAscending, kDescending };

SupportMap compute_support(const Graph& g);

TrussMap truss_decompose(const Graph& g, TieOrder ties = TieOrder::kAscending);

// Peels the ego-network with one bitmap per member: support is
// popcount(bits[a] & bits[b]) and removing (a, b) clears both bits.
TrussMap bitmap_truss_decompose(const EgoNetwork& ego, TieOrder ties = TieOrder::kAscending);

// Vertex trussness: max over incident edges, 0 for isolated vertices.
template <class EdgeT>
std::vector<std::uint32_t> vertex_trussness(std::size_t vertex_count, std::span<const EdgeT> edges,
                                            const TrussMap& tmap) {
  std::vector<std::uint32_t> tau(vertex_count, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    tau[a] = std::max(tau[a], tmap[e]);
    tau[b] = std::max(tau[b], tmap[e]);
  }
  return tau;
}

}  // namespace trussdiv
