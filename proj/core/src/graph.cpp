#include "trussdiv/graph.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>

namespace trussdiv {

namespace {

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  return s;
}

// Parses the next unsigned integer token; advances `s` past it.
std::optional<ExternalId> next_token(std::string_view& s) {
  s = trim_left(s);
  if (s.empty()) return std::nullopt;
  ExternalId value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data()) return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  if (!s.empty() && s.front() != ' ' && s.front() != '\t' && s.front() != '\r') return std::nullopt;
  return value;
}

}  // namespace

Graph Graph::from_external_edges(std::span<const std::pair<ExternalId, ExternalId>> raw,
                                 LoadSummary* summary) {
  std::vector<std::pair<ExternalId, ExternalId>> pairs;
  pairs.reserve(raw.size());
  std::size_t loops = 0;
  for (auto [a, b] : raw) {
    if (a == b) {
      ++loops;
      continue;
    }
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  auto last = std::unique(pairs.begin(), pairs.end());
  const std::size_t dups = static_cast<std::size_t>(pairs.end() - last);
  pairs.erase(last, pairs.end());

  std::vector<ExternalId> ids;
  ids.reserve(pairs.size() * 2);
  for (auto [a, b] : pairs) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto remap = [&ids](ExternalId x) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({remap(a), remap(b)});

  if (summary != nullptr) {
    summary->self_loops += loops;
    summary->duplicate_edges += dups;
  }
  return from_internal_edges(std::move(ids), std::move(edges));
}

Graph Graph::from_internal_edges(std::vector<ExternalId> external, std::vector<Edge> edges) {
  if (external.size() >= static_cast<std::size_t>(kNoVertex)) {
    throw InputError("graph has too many vertices for 32-bit ids");
  }
  if (edges.size() >= static_cast<std::size_t>(kNoEdge)) {
    throw InputError("graph has too many edges for 32-bit ids");
  }
  Graph g;
  g.external_ = std::move(external);
  std::sort(edges.begin(), edges.end());
  g.edges_ = std::move(edges);

  const std::size_t n = g.external_.size();
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adj_.resize(g.edges_.size() * 2);
  g.adj_edge_.resize(g.edges_.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v). Filling the v-side first appends, for each
  // vertex x, its smaller neighbours in ascending order, then the u-side
  // pass appends its larger neighbours in ascending order.
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    const auto [u, v] = g.edges_[e];
    g.adj_[cursor[v]] = u;
    g.adj_edge_[cursor[v]++] = e;
  }
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    const auto [u, v] = g.edges_[e];
    g.adj_[cursor[u]] = v;
    g.adj_edge_[cursor[u]++] = e;
  }
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count() || u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::optional<VertexId> Graph::internal_id(ExternalId id) const {
  auto it = std::lower_bound(external_.begin(), external_.end(), id);
  if (it == external_.end() || *it != id) return std::nullopt;
  return static_cast<VertexId>(it - external_.begin());
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count()) {
    throw InvalidArgument("vertex id " + std::to_string(v) + " out of range (n=" +
                          std::to_string(vertex_count()) + ")");
  }
}

Graph Graph::edge_subgraph(const std::vector<bool>& keep) const {
  std::vector<VertexId> remap(vertex_count(), kNoVertex);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (!keep[e]) continue;
    remap[edges_[e].u] = 0;
    remap[edges_[e].v] = 0;
  }
  std::vector<ExternalId> ext;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (remap[v] == kNoVertex) continue;
    remap[v] = static_cast<VertexId>(ext.size());
    ext.push_back(external_[v]);
  }
  std::vector<Edge> sub;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (keep[e]) sub.push_back({remap[edges_[e].u], remap[edges_[e].v]});
  }
  return from_internal_edges(std::move(ext), std::move(sub));
}

Graph load_edge_list(const std::filesystem::path& path, LoadSummary* summary) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path.string());

  LoadSummary local;
  std::vector<std::pair<ExternalId, ExternalId>> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim_left(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      ++local.comment_lines;
      continue;
    }
    auto a = next_token(s);
    auto b = a ? next_token(s) : std::nullopt;
    if (!a || !b || !trim_left(s).empty()) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": line " + std::to_string(lineno) +
                       ": expected two non-negative integer vertex ids");
    }
    raw.emplace_back(*a, *b);
    ++local.lines;
  }
  if (in.bad()) throw InputError("read error on " + path.string());

  Graph g = Graph::from_external_edges(raw, &local);
  if (summary != nullptr) *summary = local;
  return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << g.external_id(e.u) << ' ' << g.external_id(e.v) << '\n';
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_edge_list(g, out);
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw InvalidArgument("common_neighbors requires two distinct vertices");
  std::vector<VertexId> out;
  for_each_common(g.neighbors(u), g.neighbors(v),
                  [&out](VertexId w, std::size_t, std::size_t) { out.push_back(w); });
  return out;
}

OrientedGraph::OrientedGraph(const Graph& g) : offsets_(g.vertex_count() + 1, 0) {
  const std::size_t n = g.vertex_count();
  auto before = [&g](VertexId a, VertexId b) {
    const auto da = g.degree(a);
    const auto db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  for (const Edge& e : g.edges()) ++offsets_[(before(e.u, e.v) ? e.u : e.v) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  heads_.resize(g.edge_count());
  edge_ids_.resize(g.edge_count());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (!before(u, v)) std::swap(u, v);
    heads_[cursor[u]] = v;
    edge_ids_[cursor[u]++] = e;
  }
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  s.max_degree = g.max_degree();
  for_each_triangle(g, [&s](VertexId, VertexId, VertexId, EdgeId, EdgeId, EdgeId) { ++s.triangles; });
  return s;
}

std::vector<std::uint64_t> vertex_triangle_counts(const Graph& g) {
  std::vector<std::uint64_t> count(g.vertex_count(), 0);
  for_each_triangle(g, [&count](VertexId a, VertexId b, VertexId c, EdgeId, EdgeId, EdgeId) {
    ++count[a];
    ++count[b];
    ++count[c];
  });
  return count;
}

}  // namespace trussdiv
