#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trussdiv/graph.hpp"

namespace trussdiv {

// Edge of an ego-network in local ids, a < b.
struct LocalEdge {
  std::uint32_t a;
  std::uint32_t b;

  friend bool operator==(const LocalEdge&, const LocalEdge&) = default;
  friend auto operator<=>(const LocalEdge&, const LocalEdge&) = default;
};

/// Subgraph induced by N(center), without the center itself.
///
/// Local id i names members[i]; members are N(center) in ascending global
/// order, so local order agrees with global order. Edges are sorted.
struct EgoNetwork {
  VertexId center = kNoVertex;
  std::vector<VertexId> members;
  std::vector<LocalEdge> edges;

  std::size_t member_count() const { return members.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

EgoNetwork extract_ego(const Graph& g, VertexId v);

// Default cap for materialising every ego-network at once, overridable
// through TRUSSDIV_MEM_CAP_MB.
std::size_t default_memory_cap_bytes();

/// Ego edges of every vertex, produced by one pass over the edges of G:
/// each edge (u, w) is appended to the ego of every common neighbour of
/// u and w. The store references the graph, which must outlive it.
class EgoStore {
 public:
  EgoStore(const Graph& g, std::vector<std::size_t> offsets, std::vector<LocalEdge> edges)
      : graph_(&g), offsets_(std::move(offsets)), edges_(std::move(edges)) {}

  const Graph& graph() const { return *graph_; }
  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::span<const LocalEdge> edges_of(VertexId v) const {
    return {edges_.data() + offsets_[v], edges_.data() + offsets_[v + 1]};
  }
  // Sum of ego edge counts, 3 x triangle count.
  std::size_t total_edges() const { return edges_.size(); }

  EgoNetwork ego(VertexId v) const;

 private:
  const Graph* graph_;
  std::vector<std::size_t> offsets_;
  std::vector<LocalEdge> edges_;
};

// Throws ResourceCapError ("ego materialization too large") when the store
// would exceed `memory_cap_bytes`.
EgoStore extract_all_egos(const Graph& g, std::size_t memory_cap_bytes = default_memory_cap_bytes());

}  // namespace trussdiv
