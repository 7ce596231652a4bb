#include "trussdiv/tsd_index.hpp"

#include <chrono>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "index_json.hpp"
#include "trussdiv/parallel.hpp"
#include "trussdiv/union_find.hpp"

namespace trussdiv {

namespace {

std::uint32_t local_of(std::span<const VertexId> members, VertexId x) {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) throw InputError("index edge endpoint is not a member");
  return static_cast<std::uint32_t>(it - members.begin());
}

}  // namespace

std::vector<ForestEdge> build_tsd_forest(const EgoNetwork& ego, const TrussMap& tmap) {
  std::vector<ForestEdge> forest;
  if (ego.edges.empty()) return forest;

  // Bin-sort edge positions by weight, heaviest first; ties keep edge order.
  const std::uint32_t max_w = tmap.max();
  std::vector<std::size_t> start(static_cast<std::size_t>(max_w) + 2, 0);
  for (std::size_t e = 0; e < ego.edges.size(); ++e) ++start[max_w - tmap[e] + 1];
  for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  std::vector<std::uint32_t> order(ego.edges.size());
  for (std::size_t e = 0; e < ego.edges.size(); ++e) order[start[max_w - tmap[e]]++] = static_cast<std::uint32_t>(e);

  UnionFind uf(ego.member_count());
  for (auto e : order) {
    const auto [a, b] = ego.edges[e];
    if (uf.unite(a, b)) forest.push_back({a, b, tmap[e]});
  }
  return forest;
}

TsdIndex::TsdIndex(std::vector<ExternalId> external_ids) : external_(std::move(external_ids)) {
  member_offsets_.reserve(external_.size() + 1);
  forest_offsets_.reserve(external_.size() + 1);
  cumulative_offsets_.reserve(external_.size() + 1);
}

void TsdIndex::append_vertex(std::span<const VertexId> members, std::vector<ForestEdge> forest) {
  members_.insert(members_.end(), members.begin(), members.end());
  member_offsets_.push_back(members_.size());

  std::stable_sort(forest.begin(), forest.end(),
                   [](const ForestEdge& x, const ForestEdge& y) { return x.weight > y.weight; });
  const std::uint32_t max_w = forest.empty() ? 0 : forest.front().weight;
  const std::size_t base = cumulative_.size();
  cumulative_.resize(base + max_w + 1, 0);
  for (const auto& fe : forest) ++cumulative_[base + fe.weight];
  for (std::size_t t = max_w; t-- > 0;) cumulative_[base + t] += cumulative_[base + t + 1];
  cumulative_offsets_.push_back(cumulative_.size());

  forest_.insert(forest_.end(), forest.begin(), forest.end());
  forest_offsets_.push_back(forest_.size());
}

std::optional<VertexId> TsdIndex::internal_id(ExternalId id) const {
  auto it = std::lower_bound(external_.begin(), external_.end(), id);
  if (it == external_.end() || *it != id) return std::nullopt;
  return static_cast<VertexId>(it - external_.begin());
}

void TsdIndex::check_vertex(VertexId v) const {
  if (v >= vertex_count() || member_offsets_.size() <= v + 1) {
    throw InvalidArgument("unknown vertex " + std::to_string(v) + " in TSD index");
  }
}

TsdIndex build_tsd(const Graph& g, const IndexBuildOptions& opts) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<ForestEdge>> forests(n);
  auto build_one = [&](VertexId v, const EgoNetwork& ego) {
    forests[v] = build_tsd_forest(ego, bitmap_truss_decompose(ego));
  };
  if (opts.ego_source == EgoSource::kShared) {
    const EgoStore store = extract_all_egos(g, opts.memory_cap_bytes);
    parallel_for(n, opts.threads, [&](std::size_t v) {
      const auto id = static_cast<VertexId>(v);
      build_one(id, store.ego(id));
    });
  } else {
    parallel_for(n, opts.threads, [&](std::size_t v) {
      const auto id = static_cast<VertexId>(v);
      build_one(id, extract_ego(g, id));
    });
  }

  TsdIndex idx({g.external_ids().begin(), g.external_ids().end()});
  for (VertexId v = 0; v < n; ++v) {
    idx.append_vertex(g.neighbors(v), std::move(forests[v]));
    std::vector<ForestEdge>().swap(forests[v]);
  }
  return idx;
}

ScoreRecord tsd_score(const TsdIndex& idx, VertexId v, std::uint32_t k, bool with_contexts) {
  check_k(k);
  idx.check_vertex(v);
  ScoreRecord rec;
  rec.vertex = idx.external_id(v);
  rec.k = k;

  auto forest = idx.forest(v).first(idx.edges_at_least(v, k));
  if (forest.empty()) return rec;
  auto members = idx.members(v);

  // Every kept forest edge joins two components, so a forest with c
  // touched vertices and f edges has c - f components.
  std::vector<std::uint32_t> touched;
  touched.reserve(forest.size() * 2);
  for (const auto& fe : forest) {
    touched.push_back(fe.a);
    touched.push_back(fe.b);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  rec.score = static_cast<std::uint32_t>(touched.size() - forest.size());
  if (!with_contexts) return rec;

  auto pos = [&touched](std::uint32_t x) {
    return static_cast<std::uint32_t>(std::lower_bound(touched.begin(), touched.end(), x) - touched.begin());
  };
  UnionFind uf(touched.size());
  for (const auto& fe : forest) uf.unite(pos(fe.a), pos(fe.b));
  std::vector<std::uint32_t> slot(touched.size(), UINT32_MAX);
  rec.contexts.clear();
  for (std::uint32_t i = 0; i < touched.size(); ++i) {
    const auto root = uf.find(i);
    if (slot[root] == UINT32_MAX) {
      slot[root] = static_cast<std::uint32_t>(rec.contexts.size());
      rec.contexts.emplace_back();
    }
    rec.contexts[slot[root]].push_back(idx.external_id(members[touched[i]]));
  }
  canonicalize(rec.contexts);
  return rec;
}

std::uint32_t tsd_upper_bound(const TsdIndex& idx, VertexId v, std::uint32_t k) {
  check_k(k);
  idx.check_vertex(v);
  return static_cast<std::uint32_t>(idx.edges_at_least(v, k) / (k - 1));
}

TopRResult tsd_topr(const TsdIndex& idx, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  check_k(opts.k);
  check_r(opts.r, idx.vertex_count());
  if (idx.vertex_count() == 0) return {};

  std::vector<detail::Candidate> candidates;
  candidates.reserve(idx.vertex_count());
  for (VertexId v = 0; v < idx.vertex_count(); ++v) {
    candidates.push_back({tsd_upper_bound(idx, v, opts.k), idx.external_id(v), v});
  }
  const auto score_start = std::chrono::steady_clock::now();
  TopRResult result = detail::pruned_top_r(
      candidates, opts.r, [&](VertexId v) { return tsd_score(idx, v, opts.k, opts.with_contexts); });
  if (opts.pad_with_zero) detail::pad_with_zero(result, idx.external_ids(), opts.r, opts.k);
  const auto end = std::chrono::steady_clock::now();
  result.phases.bound = std::chrono::duration<double>(score_start - start).count();
  result.phases.score = std::chrono::duration<double>(end - score_start).count();
  result.seconds = std::chrono::duration<double>(end - start).count();
  return result;
}

void save_tsd(const TsdIndex& idx, std::ostream& out) {
  out << R"({"format":"tsd","version":1,"vertices":[)";
  for (VertexId v = 0; v < idx.vertex_count(); ++v) {
    if (v != 0) out << ',';
    out << "\n{\"id\":" << idx.external_id(v) << ",\"members\":[";
    auto members = idx.members(v);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i != 0) out << ',';
      out << idx.external_id(members[i]);
    }
    out << "],\"edges\":[";
    bool first = true;
    for (const auto& fe : idx.forest(v)) {
      if (!first) out << ',';
      first = false;
      out << '[' << idx.external_id(members[fe.a]) << ',' << idx.external_id(members[fe.b]) << ',' << fe.weight
          << ']';
    }
    out << "]}";
  }
  out << "\n]}\n";
}

void save_tsd(const TsdIndex& idx, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  save_tsd(idx, out);
}

TsdIndex load_tsd(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    auto ids = detail::read_vertex_ids(doc, "tsd");
    TsdIndex idx(ids);
    std::vector<VertexId> members;
    std::vector<ForestEdge> forest;
    for (const auto& vj : doc.at("vertices")) {
      members.clear();
      forest.clear();
      for (const auto& m : vj.at("members")) members.push_back(detail::to_internal(ids, m.get<ExternalId>()));
      if (!std::is_sorted(members.begin(), members.end())) throw InputError("TSD members must be ascending");
      for (const auto& ej : vj.at("edges")) {
        const auto a = local_of(members, detail::to_internal(ids, ej.at(0).get<ExternalId>()));
        const auto b = local_of(members, detail::to_internal(ids, ej.at(1).get<ExternalId>()));
        forest.push_back({std::min(a, b), std::max(a, b), ej.at(2).get<std::uint32_t>()});
      }
      idx.append_vertex(members, forest);
    }
    return idx;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed TSD index: ") + e.what());
  }
}

TsdIndex load_tsd(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open index file: " + path.string());
  return load_tsd(in);
}

}  // namespace trussdiv
