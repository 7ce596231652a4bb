#include "trussdiv/diversity.hpp"

#include <string>

#include "trussdiv/union_find.hpp"

namespace trussdiv {

void check_k(std::uint32_t k) {
  if (k < 2) throw InvalidArgument("k must be at least 2 (got " + std::to_string(k) + ")");
}

void canonicalize(std::vector<Context>& contexts) {
  for (auto& c : contexts) std::sort(c.begin(), c.end());
  std::sort(contexts.begin(), contexts.end(),
            [](const Context& a, const Context& b) { return a.front() < b.front(); });
}

ScoreRecord score_ego(const Graph& g, const EgoNetwork& ego, const TrussMap& tmap, std::uint32_t k,
                      bool with_contexts) {
  check_k(k);
  ScoreRecord rec;
  rec.vertex = g.external_id(ego.center);
  rec.k = k;

  const std::size_t L = ego.member_count();
  UnionFind uf(L);
  std::vector<char> kept(L, 0);
  for (std::size_t e = 0; e < ego.edges.size(); ++e) {
    if (tmap[e] < k) continue;
    const auto [a, b] = ego.edges[e];
    kept[a] = kept[b] = 1;
    uf.unite(a, b);
  }

  std::vector<std::uint32_t> slot(with_contexts ? L : 0, UINT32_MAX);
  for (std::uint32_t x = 0; x < L; ++x) {
    if (!kept[x] || uf.find(x) != x) continue;
    if (with_contexts) slot[x] = rec.score;
    ++rec.score;
  }
  if (with_contexts) {
    rec.contexts.resize(rec.score);
    for (std::uint32_t x = 0; x < L; ++x) {
      if (kept[x]) rec.contexts[slot[uf.find(x)]].push_back(g.external_id(ego.members[x]));
    }
    canonicalize(rec.contexts);
  }
  return rec;
}

ScoreRecord compute_score(const Graph& g, VertexId v, std::uint32_t k, bool with_contexts) {
  check_k(k);
  const EgoNetwork ego = extract_ego(g, v);
  const TrussMap tmap = bitmap_truss_decompose(ego);
  return score_ego(g, ego, tmap, k, with_contexts);
}

SocialContexts social_contexts(const Graph& g, VertexId v, std::uint32_t k) {
  ScoreRecord rec = compute_score(g, v, k, true);
  return {rec.vertex, k, std::move(rec.contexts)};
}

std::uint32_t upper_bound_score(std::size_t degree, std::uint64_t ego_edges, std::uint32_t k) {
  check_k(k);
  const std::uint64_t by_vertices = degree / k;
  const std::uint64_t by_edges = 2 * ego_edges / (static_cast<std::uint64_t>(k) * (k - 1));
  return static_cast<std::uint32_t>(std::min(by_vertices, by_edges));
}

std::uint32_t upper_bound_score(const Graph& g, VertexId v, std::uint32_t k) {
  g.check_vertex(v);
  std::uint64_t ego_edges = 0;
  auto nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for_each_common(nv.subspan(i + 1), g.neighbors(nv[i]),
                    [&ego_edges](VertexId, std::size_t, std::size_t) { ++ego_edges; });
  }
  return upper_bound_score(g.degree(v), ego_edges, k);
}

}  // namespace trussdiv
