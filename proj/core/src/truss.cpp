#include "trussdiv/truss.hpp"

#include <bit>

namespace trussdiv {

namespace {

// Edges bin-sorted by current support. Supports only ever move down by
// one, so a decrement is a swap to the front of the edge's bin.
class PeelQueue {
 public:
  PeelQueue(std::vector<std::uint32_t>& support, TieOrder ties)
      : support_(support), order_(support.size()), position_(support.size()) {
    std::uint32_t max_support = 0;
    for (auto s : support_) max_support = std::max(max_support, s);
    bin_start_.assign(static_cast<std::size_t>(max_support) + 2, 0);
    for (auto s : support_) ++bin_start_[s + 1];
    for (std::size_t s = 1; s < bin_start_.size(); ++s) bin_start_[s] += bin_start_[s - 1];

    std::vector<std::size_t> fill(bin_start_.begin(), bin_start_.end() - 1);
    const std::size_t m = support_.size();
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t e = ties == TieOrder::kAscending ? i : m - 1 - i;
      const std::size_t p = fill[support_[e]]++;
      order_[p] = static_cast<EdgeId>(e);
      position_[e] = p;
    }
  }

  bool empty() const { return head_ == order_.size(); }

  EdgeId pop() { return order_[head_++]; }

  void decrement(EdgeId e) {
    const std::uint32_t s = support_[e];
    const std::size_t first = bin_start_[s];
    const EdgeId other = order_[first];
    const std::size_t pe = position_[e];
    order_[first] = e;
    order_[pe] = other;
    position_[e] = first;
    position_[other] = pe;
    ++bin_start_[s];
    --support_[e];
  }

 private:
  std::vector<std::uint32_t>& support_;
  std::vector<EdgeId> order_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> bin_start_;
  std::size_t head_ = 0;
};

}  // namespace

SupportMap compute_support(const Graph& g) {
  SupportMap map;
  map.support.assign(g.edge_count(), 0);
  for_each_triangle(g, [&map](VertexId, VertexId, VertexId, EdgeId ab, EdgeId bc, EdgeId ac) {
    ++map.support[ab];
    ++map.support[bc];
    ++map.support[ac];
  });
  return map;
}

TrussMap truss_decompose(const Graph& g, TieOrder ties) {
  std::vector<std::uint32_t> sup = compute_support(g).support;
  TrussMap out;
  out.trussness.assign(g.edge_count(), 0);
  std::vector<char> removed(g.edge_count(), 0);
  PeelQueue queue(sup, ties);
  std::uint32_t level = 0;

  while (!queue.empty()) {
    const EdgeId e = queue.pop();
    level = std::max(level, sup[e]);
    out.trussness[e] = level + 2;

    auto [u, v] = g.edge(e);
    if (g.degree(u) > g.degree(v)) std::swap(u, v);
    auto nu = g.neighbors(u);
    auto eu = g.incident_edges(u);
    auto nv = g.neighbors(v);
    auto ev = g.incident_edges(v);
    auto lo = nv.begin();
    for (std::size_t i = 0; i < nu.size() && lo != nv.end(); ++i) {
      const VertexId w = nu[i];
      if (w == v || removed[eu[i]]) continue;
      lo = std::lower_bound(lo, nv.end(), w);
      if (lo == nv.end() || *lo != w) continue;
      const EdgeId e_vw = ev[static_cast<std::size_t>(lo - nv.begin())];
      if (removed[e_vw]) continue;
      if (sup[eu[i]] > level) queue.decrement(eu[i]);
      if (sup[e_vw] > level) queue.decrement(e_vw);
    }
    removed[e] = 1;
  }
  return out;
}

TrussMap bitmap_truss_decompose(const EgoNetwork& ego, TieOrder ties) {
  TrussMap out;
  const std::size_t m = ego.edges.size();
  if (m == 0) return out;
  out.trussness.assign(m, 0);

  // Bitmaps span only the members that have at least one ego edge.
  std::vector<std::uint32_t> rank(ego.member_count(), UINT32_MAX);
  for (const auto& e : ego.edges) {
    rank[e.a] = 0;
    rank[e.b] = 0;
  }
  std::uint32_t active = 0;
  for (auto& r : rank) {
    if (r != UINT32_MAX) r = active++;
  }
  const std::size_t words = (active + 63) / 64;

  std::vector<std::size_t> offsets(active + 1, 0);
  for (const auto& e : ego.edges) {
    ++offsets[rank[e.a] + 1];
    ++offsets[rank[e.b] + 1];
  }
  for (std::size_t i = 0; i < active; ++i) offsets[i + 1] += offsets[i];
  std::vector<std::uint32_t> nbr(2 * m);
  std::vector<std::uint32_t> nbr_edge(2 * m);
  {
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::uint32_t i = 0; i < m; ++i) {
      const auto ra = rank[ego.edges[i].a];
      const auto rb = rank[ego.edges[i].b];
      nbr[cursor[rb]] = ra;
      nbr_edge[cursor[rb]++] = i;
    }
    for (std::uint32_t i = 0; i < m; ++i) {
      const auto ra = rank[ego.edges[i].a];
      const auto rb = rank[ego.edges[i].b];
      nbr[cursor[ra]] = rb;
      nbr_edge[cursor[ra]++] = i;
    }
  }
  auto find_local = [&](std::uint32_t x, std::uint32_t z) {
    auto first = nbr.begin() + static_cast<std::ptrdiff_t>(offsets[x]);
    auto last = nbr.begin() + static_cast<std::ptrdiff_t>(offsets[x + 1]);
    auto it = std::lower_bound(first, last, z);
    return nbr_edge[static_cast<std::size_t>(it - nbr.begin())];
  };

  std::vector<std::uint64_t> bits(static_cast<std::size_t>(active) * words, 0);
  auto row = [&](std::uint32_t x) { return bits.data() + static_cast<std::size_t>(x) * words; };
  for (std::uint32_t x = 0; x < active; ++x) {
    for (std::size_t p = offsets[x]; p < offsets[x + 1]; ++p) {
      row(x)[nbr[p] / 64] |= std::uint64_t{1} << (nbr[p] % 64);
    }
  }
  // Each row's set bits lie within words [first_word, last_word].
  std::vector<std::uint32_t> first_word(active), last_word(active);
  for (std::uint32_t x = 0; x < active; ++x) {
    first_word[x] = nbr[offsets[x]] / 64;
    last_word[x] = nbr[offsets[x + 1] - 1] / 64;
  }

  std::vector<std::uint32_t> sup(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto x = rank[ego.edges[i].a];
    const auto y = rank[ego.edges[i].b];
    const auto lo = std::max(first_word[x], first_word[y]);
    const auto hi = std::min(last_word[x], last_word[y]);
    std::uint32_t count = 0;
    for (auto w = lo; w <= hi && lo <= hi; ++w) count += std::popcount(row(x)[w] & row(y)[w]);
    sup[i] = count;
  }

  PeelQueue queue(sup, ties);
  std::uint32_t level = 0;
  while (!queue.empty()) {
    const EdgeId e = queue.pop();
    level = std::max(level, sup[e]);
    out.trussness[e] = level + 2;

    const auto x = rank[ego.edges[e].a];
    const auto y = rank[ego.edges[e].b];
    const auto lo = std::max(first_word[x], first_word[y]);
    const auto hi = std::min(last_word[x], last_word[y]);
    for (auto w = lo; lo <= hi && w <= hi; ++w) {
      std::uint64_t common = row(x)[w] & row(y)[w];
      while (common != 0) {
        const auto z = static_cast<std::uint32_t>(w * 64 + std::countr_zero(common));
        common &= common - 1;
        const auto e_xz = find_local(x, z);
        const auto e_yz = find_local(y, z);
        if (sup[e_xz] > level) queue.decrement(e_xz);
        if (sup[e_yz] > level) queue.decrement(e_yz);
      }
    }
    row(x)[y / 64] &= ~(std::uint64_t{1} << (y % 64));
    row(y)[x / 64] &= ~(std::uint64_t{1} << (x % 64));
  }
  return out;
}

}  // namespace trussdiv
