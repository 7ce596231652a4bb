#include "trussdiv/ego.hpp"

#include <cstdlib>
#include <string>

namespace trussdiv {

EgoNetwork extract_ego(const Graph& g, VertexId v) {
  g.check_vertex(v);
  EgoNetwork ego;
  ego.center = v;
  auto nv = g.neighbors(v);
  ego.members.assign(nv.begin(), nv.end());
  for (std::uint32_t i = 0; i < nv.size(); ++i) {
    // Only partners after u in N(v), so each triangle through v yields one edge.
    auto tail = nv.subspan(i + 1);
    for_each_common(tail, g.neighbors(nv[i]), [&](VertexId, std::size_t j, std::size_t) {
      ego.edges.push_back({i, static_cast<std::uint32_t>(i + 1 + j)});
    });
  }
  return ego;
}

std::size_t default_memory_cap_bytes() {
  constexpr std::size_t kDefaultMb = 4096;
  std::size_t mb = kDefaultMb;
  if (const char* env = std::getenv("TRUSSDIV_MEM_CAP_MB"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && parsed > 0) mb = static_cast<std::size_t>(parsed);
  }
  return mb << 20;
}

EgoNetwork EgoStore::ego(VertexId v) const {
  graph_->check_vertex(v);
  EgoNetwork out;
  out.center = v;
  auto nv = graph_->neighbors(v);
  out.members.assign(nv.begin(), nv.end());
  auto es = edges_of(v);
  out.edges.assign(es.begin(), es.end());
  return out;
}

EgoStore extract_all_egos(const Graph& g, std::size_t memory_cap_bytes) {
  const std::size_t n = g.vertex_count();
  // Sizing pass: m_v per vertex, so the store is allocated once and the
  // cap is enforced before any ego edge is written.
  const auto counts = vertex_triangle_counts(g);
  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + counts[v];
  const std::size_t total = offsets[n];
  const std::size_t bytes = total * sizeof(LocalEdge) + offsets.size() * sizeof(std::size_t);
  if (bytes > memory_cap_bytes) {
    throw ResourceCapError("ego materialization too large: " + std::to_string(total) + " ego edges need " +
                           std::to_string(bytes >> 20) + " MiB, cap is " +
                           std::to_string(memory_cap_bytes >> 20) + " MiB");
  }

  // back[adjacency_offset(u) + i] is the position of u in N(neighbors(u)[i]).
  // Visiting u in ascending order fills each N(x) front to back.
  std::vector<std::uint32_t> back(2 * g.edge_count());
  {
    std::vector<std::uint32_t> seen(n, 0);
    for (VertexId u = 0; u < n; ++u) {
      const std::size_t base = g.adjacency_offset(u);
      auto nu = g.neighbors(u);
      for (std::size_t i = 0; i < nu.size(); ++i) back[base + i] = seen[nu[i]]++;
    }
  }

  // Edges are visited in (u, v) order and local order is global order, so
  // every ego receives its edges already sorted.
  std::vector<LocalEdge> edges(total);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : g.edges()) {
    const std::size_t bu = g.adjacency_offset(e.u);
    const std::size_t bv = g.adjacency_offset(e.v);
    for_each_common(g.neighbors(e.u), g.neighbors(e.v), [&](VertexId w, std::size_t i, std::size_t j) {
      edges[cursor[w]++] = {back[bu + i], back[bv + j]};
    });
  }
  return EgoStore(g, std::move(offsets), std::move(edges));
}

}  // namespace trussdiv
