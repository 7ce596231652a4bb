#include "trussdiv/generators.hpp"

#include <random>
#include <vector>

namespace trussdiv {

namespace {

// Platform-independent draws on top of mt19937_64 (whose output sequence
// is fixed by the standard, unlike the std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

Graph from_dense(std::size_t n, std::vector<Edge> edges) {
  std::vector<ExternalId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  Graph full = Graph::from_internal_edges(std::move(ids), std::move(edges));
  // Drop vertices without edges, as loading the same edge list would.
  return full.edge_subgraph(std::vector<bool>(full.edge_count(), true));
}

}  // namespace

Graph graph_from_pairs(std::initializer_list<std::pair<ExternalId, ExternalId>> pairs) {
  std::vector<std::pair<ExternalId, ExternalId>> raw(pairs);
  return Graph::from_external_edges(raw);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return from_dense(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return from_dense(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= leaves; ++u) edges.push_back({0, u});
  return from_dense(leaves + 1, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  if (n > 2) edges.push_back({0, static_cast<VertexId>(n - 1)});
  return from_dense(n, std::move(edges));
}

Graph octahedron_graph() {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < 6; ++u) {
    for (VertexId v = u + 1; v < 6; ++v) {
      if (v != u + 3) edges.push_back({u, v});
    }
  }
  return from_dense(6, std::move(edges));
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.push_back({u, v});
    }
  }
  return from_dense(n, std::move(edges));
}

Graph holme_kim(std::size_t n, std::size_t edges_per_vertex, double triad_probability, std::uint64_t seed) {
  const std::size_t m = std::max<std::size_t>(1, edges_per_vertex);
  const std::size_t seed_size = std::min(n, m + 1);
  Rng rng(seed);
  std::vector<std::vector<VertexId>> adj(n);
  std::vector<VertexId> pool;  // every edge endpoint once: degree-proportional sampling
  std::vector<Edge> edges;
  edges.reserve(n * m);
  pool.reserve(2 * n * m);

  auto connect = [&](VertexId a, VertexId b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    pool.push_back(a);
    pool.push_back(b);
    edges.push_back({std::min(a, b), std::max(a, b)});
  };
  for (VertexId u = 0; u < seed_size; ++u) {
    for (VertexId v = u + 1; v < seed_size; ++v) connect(u, v);
  }

  std::vector<VertexId> chosen;
  for (auto t = static_cast<VertexId>(seed_size); t < n; ++t) {
    chosen.clear();
    auto taken = [&chosen](VertexId x) { return std::find(chosen.begin(), chosen.end(), x) != chosen.end(); };
    auto preferential = [&]() {
      for (;;) {
        const VertexId x = pool[rng.below(pool.size())];
        if (!taken(x)) return x;
      }
    };
    const std::size_t want = std::min<std::size_t>(m, t);
    VertexId last = preferential();
    chosen.push_back(last);
    while (chosen.size() < want) {
      VertexId next = kNoVertex;
      if (rng.unit() < triad_probability) {
        const auto& nb = adj[last];
        for (int attempt = 0; attempt < 4 && next == kNoVertex; ++attempt) {
          const VertexId x = nb[rng.below(nb.size())];
          if (!taken(x)) next = x;
        }
      }
      if (next == kNoVertex) {
        next = preferential();
        last = next;
      }
      chosen.push_back(next);
    }
    for (VertexId x : chosen) connect(t, x);
  }
  return from_dense(n, std::move(edges));
}

}  // namespace trussdiv
