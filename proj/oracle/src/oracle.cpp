#include "trussdiv/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace trussdiv::oracle {

namespace {

// Definitional decomposition of a small graph given as a dense matrix.
EdgeTrussness peel_dense(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<char> alive(n * n, 0);
  for (auto [u, v] : edges) alive[u * n + v] = alive[v * n + u] = 1;

  EdgeTrussness tau;
  for (auto e : edges) tau[e] = 2;
  std::vector<std::pair<VertexId, VertexId>> remaining = edges;
  for (std::uint32_t k = 3; !remaining.empty(); ++k) {
    for (;;) {
      std::vector<std::pair<VertexId, VertexId>> keep;
      std::vector<std::pair<VertexId, VertexId>> drop;
      for (auto [u, v] : remaining) {
        std::uint32_t triangles = 0;
        for (std::size_t w = 0; w < n; ++w) {
          if (alive[u * n + w] && alive[v * n + w]) ++triangles;
        }
        (triangles + 2 >= k ? keep : drop).emplace_back(u, v);
      }
      for (auto [u, v] : drop) alive[u * n + v] = alive[v * n + u] = 0;
      remaining.swap(keep);
      if (drop.empty()) break;
    }
    for (auto e : remaining) tau[e] = k;
  }
  return tau;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw InvalidArgument("oracle limited to " + std::to_string(cap) + " vertices (got " + std::to_string(n) + ")");
  }
}

bool adjacent(const Graph& g, VertexId a, VertexId b) {
  auto nb = g.neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

}  // namespace

EdgeTrussness oracle_truss(const Graph& g, std::size_t vertex_cap) {
  check_cap(g.vertex_count(), vertex_cap);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return peel_dense(g.vertex_count(), edges);
}

OracleEgo oracle_ego(const Graph& g, VertexId v, std::size_t vertex_cap) {
  g.check_vertex(v);
  OracleEgo ego;
  ego.center = v;
  auto nv = g.neighbors(v);
  ego.members.assign(nv.begin(), nv.end());
  check_cap(ego.members.size(), vertex_cap);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < ego.members.size(); ++i) {
    for (VertexId j = i + 1; j < ego.members.size(); ++j) {
      if (adjacent(g, ego.members[i], ego.members[j])) edges.emplace_back(i, j);
    }
  }
  ego.trussness = peel_dense(ego.members.size(), edges);
  return ego;
}

ScoreRecord oracle_score(const Graph& g, const OracleEgo& ego, std::uint32_t k) {
  check_k(k);
  const std::size_t L = ego.members.size();
  std::vector<std::vector<VertexId>> adj(L);
  for (const auto& [e, t] : ego.trussness) {
    if (t < k) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  ScoreRecord rec;
  rec.vertex = g.external_id(ego.center);
  rec.k = k;
  std::vector<char> seen(L, 0);
  for (VertexId s = 0; s < L; ++s) {
    if (seen[s] || adj[s].empty()) continue;
    Context ctx;
    std::deque<VertexId> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      ctx.push_back(g.external_id(ego.members[x]));
      for (VertexId y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(ctx.begin(), ctx.end());
    rec.contexts.push_back(std::move(ctx));
  }
  std::sort(rec.contexts.begin(), rec.contexts.end());
  rec.score = static_cast<std::uint32_t>(rec.contexts.size());
  return rec;
}

ScoreRecord oracle_score(const Graph& g, VertexId v, std::uint32_t k, std::size_t vertex_cap) {
  return oracle_score(g, oracle_ego(g, v, vertex_cap), k);
}

TopRResult oracle_topr(const Graph& g, std::size_t r, std::uint32_t k, std::size_t vertex_cap) {
  check_k(k);
  check_r(r, g.vertex_count());
  TopRResult result;
  std::vector<ScoreRecord> all;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    ScoreRecord rec = oracle_score(g, v, k, vertex_cap);
    if (rec.score > 0) all.push_back(std::move(rec));
  }
  result.search_space = g.vertex_count();
  std::sort(all.begin(), all.end(), [](const ScoreRecord& a, const ScoreRecord& b) {
    return a.score != b.score ? a.score > b.score : a.vertex < b.vertex;
  });
  if (all.size() > r) all.resize(r);
  result.records = std::move(all);
  return result;
}

}  // namespace trussdiv::oracle
