#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "trussdiv/types.hpp"

namespace trussdiv {

// Undirected edge with u < v (internal ids).
struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// What the loader discarded while turning raw input into a simple graph.
struct LoadSummary {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

/// Immutable undirected simple graph in CSR form.
///
/// Internal ids are dense (0..n-1) and assigned in ascending order of
/// external id, so comparing internal ids is the same as comparing
/// external ids. Edge ids follow the lexicographic (u, v) order of the
/// canonical u < v edge list.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Builds from raw external-id pairs; self-loops and duplicates are
  // dropped and counted in `summary` when given.
  static Graph from_external_edges(std::span<const std::pair<ExternalId, ExternalId>> raw,
                                   LoadSummary* summary = nullptr);

  // Builds from canonical internal edges (u < v, any order, no duplicates).
  // `external` maps internal id -> external id and must be strictly ascending.
  static Graph from_internal_edges(std::vector<ExternalId> external, std::vector<Edge> edges);

  std::size_t vertex_count() const { return external_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty() && external_.empty(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  // Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  // Position of neighbors(v)[0] in the flat adjacency array (size 2m).
  std::size_t adjacency_offset(VertexId v) const { return offsets_[v]; }
  std::size_t max_degree() const;

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  bool contains(VertexId v) const { return v < vertex_count(); }
  ExternalId external_id(VertexId v) const { return external_[v]; }
  std::span<const ExternalId> external_ids() const { return external_; }
  std::optional<VertexId> internal_id(ExternalId id) const;

  // Throws InvalidArgument for an id outside 0..n-1.
  void check_vertex(VertexId v) const;

  // Subgraph on the edges with keep[e] set; vertices left without edges
  // are dropped, external ids are preserved.
  Graph edge_subgraph(const std::vector<bool>& keep) const;

 private:
  std::vector<ExternalId> external_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adj_;
  std::vector<EdgeId> adj_edge_;
  std::vector<Edge> edges_;
};

struct GraphStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::uint64_t triangles = 0;
  std::optional<std::uint32_t> max_edge_trussness;
};

Graph load_edge_list(const std::filesystem::path& path, LoadSummary* summary = nullptr);
// Writes "u v" lines with external ids, one per edge, in edge-id order.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v);

GraphStats stats(const Graph& g);

// Number of triangles through each vertex, i.e. the ego-network edge count m_v.
std::vector<std::uint64_t> vertex_triangle_counts(const Graph& g);

// Calls fn(w, i, j) for every w in a ∩ b, where a[i] == b[j] == w.
// Walks the shorter list and binary-searches the longer one.
template <class Fn>
void for_each_common(std::span<const VertexId> a, std::span<const VertexId> b, Fn&& fn) {
  const bool swap = a.size() > b.size();
  auto small = swap ? b : a;
  auto large = swap ? a : b;
  auto lo = large.begin();
  for (std::size_t i = 0; i < small.size() && lo != large.end(); ++i) {
    lo = std::lower_bound(lo, large.end(), small[i]);
    if (lo != large.end() && *lo == small[i]) {
      auto j = static_cast<std::size_t>(lo - large.begin());
      if (swap) {
        fn(small[i], j, i);
      } else {
        fn(small[i], i, j);
      }
    }
  }
}

// Degree-ordered orientation: every edge points from the endpoint that is
// lower in (degree, id) order to the higher one. Each triangle is then
// found exactly once by for_each_triangle.
class OrientedGraph {
 public:
  explicit OrientedGraph(const Graph& g);

  std::span<const VertexId> out(VertexId v) const {
    return {heads_.data() + offsets_[v], heads_.data() + offsets_[v + 1]};
  }
  std::span<const EdgeId> out_edges(VertexId v) const {
    return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
  }
  std::size_t vertex_count() const { return offsets_.size() - 1; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> heads_;
  std::vector<EdgeId> edge_ids_;
};

// fn(a, b, c, e_ab, e_bc, e_ac) once per triangle.
template <class Fn>
void for_each_triangle(const Graph& g, Fn&& fn) {
  OrientedGraph dag(g);
  std::vector<EdgeId> mark(g.vertex_count(), kNoEdge);
  for (VertexId a = 0; a < dag.vertex_count(); ++a) {
    auto out_a = dag.out(a);
    auto out_ae = dag.out_edges(a);
    if (out_a.size() < 2) continue;
    for (std::size_t i = 0; i < out_a.size(); ++i) mark[out_a[i]] = out_ae[i];
    for (std::size_t i = 0; i < out_a.size(); ++i) {
      const VertexId b = out_a[i];
      auto out_b = dag.out(b);
      auto out_be = dag.out_edges(b);
      for (std::size_t j = 0; j < out_b.size(); ++j) {
        const VertexId c = out_b[j];
        if (mark[c] != kNoEdge) fn(a, b, c, out_ae[i], out_be[j], mark[c]);
      }
    }
    for (VertexId b : out_a) mark[b] = kNoEdge;
  }
}

}  // namespace trussdiv
