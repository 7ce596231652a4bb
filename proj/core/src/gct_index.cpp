#include "trussdiv/gct_index.hpp"

#include <chrono>
#include <fstream>
#include <string>

#include "index_json.hpp"
#include "trussdiv/parallel.hpp"
#include "trussdiv/union_find.hpp"

namespace trussdiv {

EgoGct build_gct_ego(const EgoNetwork& ego, const TrussMap& tmap) {
  EgoGct out;
  if (ego.edges.empty()) return out;
  if (tmap.size() != ego.edges.size()) {
    throw Error("GCT construction: trussness map does not cover the ego-network");
  }
  const std::size_t L = ego.member_count();
  const auto tau = vertex_trussness<LocalEdge>(L, ego.edges, tmap);

  const std::uint32_t max_w = tmap.max();
  std::vector<std::size_t> start(static_cast<std::size_t>(max_w) + 2, 0);
  for (std::size_t e = 0; e < ego.edges.size(); ++e) ++start[max_w - tmap[e] + 1];
  for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  std::vector<std::uint32_t> order(ego.edges.size());
  for (std::size_t e = 0; e < ego.edges.size(); ++e) order[start[max_w - tmap[e]]++] = static_cast<std::uint32_t>(e);

  // `group` tracks supernode membership, `linked` connectivity through
  // merges and superedges. Superedges keep their member endpoints and are
  // resolved to final supernodes once all merges are done.
  UnionFind group(L);
  UnionFind linked(L);
  std::vector<LocalEdge> raw_superedges;
  std::vector<std::uint32_t> raw_weights;
  for (auto e : order) {
    const auto [a, b] = ego.edges[e];
    const std::uint32_t t = tmap[e];
    const auto sa = group.find(a);
    const auto sb = group.find(b);
    if (sa == sb || linked.connected(sa, sb)) continue;
    linked.unite(sa, sb);
    if (tau[a] == t && tau[b] == t) {
      group.unite(sa, sb);
    } else {
      raw_superedges.push_back({a, b});
      raw_weights.push_back(t);
    }
  }

  std::vector<std::uint32_t> index_of(L, UINT32_MAX);
  for (std::uint32_t x = 0; x < L; ++x) {
    if (tau[x] == 0) continue;
    const auto root = group.find(x);
    if (index_of[root] == UINT32_MAX) {
      index_of[root] = static_cast<std::uint32_t>(out.tau.size());
      out.tau.push_back(tau[x]);
      out.members.emplace_back();
    }
    out.members[index_of[root]].push_back(x);
  }
  for (std::size_t i = 0; i < raw_superedges.size(); ++i) {
    auto sa = index_of[group.find(raw_superedges[i].a)];
    auto sb = index_of[group.find(raw_superedges[i].b)];
    if (sa > sb) std::swap(sa, sb);
    out.superedges.push_back({sa, sb, raw_weights[i]});
  }
  return out;
}

GctIndex::GctIndex(std::vector<ExternalId> external_ids) : external_(std::move(external_ids)) {
  node_offsets_.reserve(external_.size() + 1);
  edge_offsets_.reserve(external_.size() + 1);
  hist_offsets_.reserve(external_.size() + 1);
}

void GctIndex::append_vertex(std::span<const std::uint32_t> tau, std::span<const std::vector<VertexId>> members,
                             std::span<const Superedge> superedges) {
  std::uint32_t max_t = 0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    nodes_.push_back({tau[i], members_.size(), members[i].size()});
    members_.insert(members_.end(), members[i].begin(), members[i].end());
    max_t = std::max(max_t, tau[i]);
  }
  node_offsets_.push_back(nodes_.size());
  edges_.insert(edges_.end(), superedges.begin(), superedges.end());
  edge_offsets_.push_back(edges_.size());

  const std::size_t base = node_hist_.size();
  node_hist_.resize(base + max_t + 1, 0);
  edge_hist_.resize(base + max_t + 1, 0);
  for (auto t : tau) ++node_hist_[base + t];
  for (const auto& se : superedges) ++edge_hist_[base + std::min(se.weight, max_t)];
  for (std::size_t t = max_t; t-- > 0;) {
    node_hist_[base + t] += node_hist_[base + t + 1];
    edge_hist_[base + t] += edge_hist_[base + t + 1];
  }
  hist_offsets_.push_back(node_hist_.size());
}

std::optional<VertexId> GctIndex::internal_id(ExternalId id) const {
  auto it = std::lower_bound(external_.begin(), external_.end(), id);
  if (it == external_.end() || *it != id) return std::nullopt;
  return static_cast<VertexId>(it - external_.begin());
}

void GctIndex::check_vertex(VertexId v) const {
  if (v >= vertex_count() || node_offsets_.size() <= v + 1) {
    throw InvalidArgument("unknown vertex " + std::to_string(v) + " in GCT index");
  }
}

GctIndex build_gct(const Graph& g, const IndexBuildOptions& opts) {
  const std::size_t n = g.vertex_count();
  std::vector<EgoGct> parts(n);
  if (opts.ego_source == EgoSource::kShared) {
    const EgoStore store = extract_all_egos(g, opts.memory_cap_bytes);
    parallel_for(n, opts.threads, [&](std::size_t v) {
      const EgoNetwork ego = store.ego(static_cast<VertexId>(v));
      parts[v] = build_gct_ego(ego, bitmap_truss_decompose(ego));
    });
  } else {
    parallel_for(n, opts.threads, [&](std::size_t v) {
      const EgoNetwork ego = extract_ego(g, static_cast<VertexId>(v));
      parts[v] = build_gct_ego(ego, bitmap_truss_decompose(ego));
    });
  }

  GctIndex idx({g.external_ids().begin(), g.external_ids().end()});
  std::vector<std::vector<VertexId>> global;
  for (VertexId v = 0; v < n; ++v) {
    auto nv = g.neighbors(v);
    global.resize(parts[v].members.size());
    for (std::size_t i = 0; i < global.size(); ++i) {
      global[i].clear();
      for (auto local : parts[v].members[i]) global[i].push_back(nv[local]);
    }
    idx.append_vertex(parts[v].tau, global, parts[v].superedges);
    parts[v] = EgoGct();
  }
  return idx;
}

std::uint32_t gct_score(const GctIndex& idx, VertexId v, std::uint32_t k) {
  check_k(k);
  idx.check_vertex(v);
  return static_cast<std::uint32_t>(idx.supernodes_at_least(v, k) - idx.superedges_at_least(v, k));
}

SocialContexts gct_contexts(const GctIndex& idx, VertexId v, std::uint32_t k) {
  check_k(k);
  idx.check_vertex(v);
  SocialContexts out{idx.external_id(v), k, {}};
  auto nodes = idx.supernodes(v);
  UnionFind uf(nodes.size());
  for (const auto& se : idx.superedges(v)) {
    if (se.weight >= k) uf.unite(se.a, se.b);
  }
  std::vector<std::uint32_t> slot(nodes.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].tau < k) continue;
    const auto root = uf.find(i);
    if (slot[root] == UINT32_MAX) {
      slot[root] = static_cast<std::uint32_t>(out.contexts.size());
      out.contexts.emplace_back();
    }
    for (VertexId m : idx.members(nodes[i])) out.contexts[slot[root]].push_back(idx.external_id(m));
  }
  canonicalize(out.contexts);
  return out;
}

TopRResult gct_topr(const GctIndex& idx, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  check_k(opts.k);
  check_r(opts.r, idx.vertex_count());
  TopRResult result;
  const std::size_t n = idx.vertex_count();
  if (n == 0) return result;

  std::vector<std::uint32_t> scores(n);
  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v) {
    scores[v] = gct_score(idx, v, opts.k);
    if (scores[v] > 0) order.push_back(v);
  }
  result.search_space = n;
  auto before = [&scores](VertexId a, VertexId b) { return scores[a] != scores[b] ? scores[a] > scores[b] : a < b; };
  const std::size_t take = std::min(opts.r, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(), before);
  for (std::size_t i = 0; i < take; ++i) {
    ScoreRecord rec{idx.external_id(order[i]), opts.k, scores[order[i]], {}, false};
    if (opts.with_contexts) rec.contexts = gct_contexts(idx, order[i], opts.k).contexts;
    result.records.push_back(std::move(rec));
  }
  if (opts.pad_with_zero) detail::pad_with_zero(result, idx.external_ids(), opts.r, opts.k);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.phases.score = result.seconds;
  return result;
}

std::optional<std::string> check_gct_invariants(const GctIndex& idx) {
  for (VertexId v = 0; v < idx.vertex_count(); ++v) {
    const std::string where = "vertex " + std::to_string(idx.external_id(v)) + ": ";
    auto nodes = idx.supernodes(v);
    std::vector<VertexId> seen;
    for (const auto& s : nodes) {
      if (s.tau < 2) return where + "supernode with tau < 2";
      if (s.count == 0) return where + "empty supernode";
      auto m = idx.members(s);
      seen.insert(seen.end(), m.begin(), m.end());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return where + "supernodes overlap";
    UnionFind uf(nodes.size());
    for (const auto& se : idx.superedges(v)) {
      if (se.a >= nodes.size() || se.b >= nodes.size() || se.a == se.b) return where + "bad superedge endpoint";
      const auto ta = nodes[se.a].tau;
      const auto tb = nodes[se.b].tau;
      if (se.weight < 2 || se.weight > std::min(ta, tb)) return where + "superedge weight exceeds endpoint tau";
      if (se.weight == ta && se.weight == tb) return where + "superedge between mergeable supernodes";
      if (!uf.unite(se.a, se.b)) return where + "superedges contain a cycle";
    }
  }
  return std::nullopt;
}

void save_gct(const GctIndex& idx, std::ostream& out) {
  out << R"({"format":"gct","version":1,"vertices":[)";
  for (VertexId v = 0; v < idx.vertex_count(); ++v) {
    if (v != 0) out << ',';
    out << "\n{\"id\":" << idx.external_id(v) << ",\"supernodes\":[";
    bool first = true;
    for (const auto& s : idx.supernodes(v)) {
      if (!first) out << ',';
      first = false;
      out << "{\"tau\":" << s.tau << ",\"members\":[";
      auto m = idx.members(s);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != 0) out << ',';
        out << idx.external_id(m[i]);
      }
      out << "]}";
    }
    out << "],\"superedges\":[";
    first = true;
    for (const auto& se : idx.superedges(v)) {
      if (!first) out << ',';
      first = false;
      out << '[' << se.a << ',' << se.b << ',' << se.weight << ']';
    }
    out << "]}";
  }
  out << "\n]}\n";
}

void save_gct(const GctIndex& idx, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  save_gct(idx, out);
}

GctIndex load_gct(std::istream& in) {
  try {
    const auto doc = nlohmann::json::parse(in);
    auto ids = detail::read_vertex_ids(doc, "gct");
    GctIndex idx(ids);
    std::vector<std::uint32_t> tau;
    std::vector<std::vector<VertexId>> members;
    std::vector<Superedge> superedges;
    for (const auto& vj : doc.at("vertices")) {
      tau.clear();
      members.clear();
      superedges.clear();
      for (const auto& sj : vj.at("supernodes")) {
        tau.push_back(sj.at("tau").get<std::uint32_t>());
        auto& m = members.emplace_back();
        for (const auto& x : sj.at("members")) m.push_back(detail::to_internal(ids, x.get<ExternalId>()));
      }
      for (const auto& ej : vj.at("superedges")) {
        auto a = ej.at(0).get<std::uint32_t>();
        auto b = ej.at(1).get<std::uint32_t>();
        if (a >= tau.size() || b >= tau.size()) throw InputError("superedge references unknown supernode");
        superedges.push_back({std::min(a, b), std::max(a, b), ej.at(2).get<std::uint32_t>()});
      }
      idx.append_vertex(tau, members, superedges);
    }
    if (auto bad = check_gct_invariants(idx)) throw InputError("invalid GCT index: " + *bad);
    return idx;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed GCT index: ") + e.what());
  }
}

GctIndex load_gct(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open index file: " + path.string());
  return load_gct(in);
}

}  // namespace trussdiv
