#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "trussdiv/diversity.hpp"
#include "trussdiv/ego.hpp"
#include "trussdiv/graph.hpp"
#include "trussdiv/search.hpp"
#include "trussdiv/truss.hpp"

namespace trussdiv {

// Where index builders get ego-networks from.
enum class EgoSource {
  kShared,     // one global pass, extract_all_egos
  kPerVertex,  // extract_ego for every vertex
};

struct IndexBuildOptions {
  unsigned threads = 1;
  std::size_t memory_cap_bytes = default_memory_cap_bytes();
  EgoSource ego_source = EgoSource::kShared;
};

// Forest edge over local member ids; weight is the ego trussness.
struct ForestEdge {
  std::uint32_t a;
  std::uint32_t b;
  std::uint32_t weight;

  friend bool operator==(const ForestEdge&, const ForestEdge&) = default;
};

// Maximum-weight spanning forest of an ego-network weighted by trussness,
// heaviest edges first.
std::vector<ForestEdge> build_tsd_forest(const EgoNetwork& ego, const TrussMap& tmap);

/// Per-vertex maximum spanning forests of every ego-network.
///
/// For each vertex the forest edges are stored heaviest first, so the
/// edges of weight >= k are a prefix whose length is read from a
/// cumulative count table.
class TsdIndex {
 public:
  TsdIndex() = default;
  explicit TsdIndex(std::vector<ExternalId> external_ids);

  // Vertices must be appended in internal id order.
  void append_vertex(std::span<const VertexId> members, std::vector<ForestEdge> forest);

  std::size_t vertex_count() const { return external_.size(); }
  ExternalId external_id(VertexId v) const { return external_[v]; }
  std::span<const ExternalId> external_ids() const { return external_; }
  std::optional<VertexId> internal_id(ExternalId id) const;
  void check_vertex(VertexId v) const;

  // N(v) in internal ids; forest edges refer to positions in this list.
  std::span<const VertexId> members(VertexId v) const {
    return {members_.data() + member_offsets_[v], members_.data() + member_offsets_[v + 1]};
  }
  std::span<const ForestEdge> forest(VertexId v) const {
    return {forest_.data() + forest_offsets_[v], forest_.data() + forest_offsets_[v + 1]};
  }
  std::uint32_t max_weight(VertexId v) const {
    return static_cast<std::uint32_t>(cumulative_offsets_[v + 1] - cumulative_offsets_[v]) - 1;
  }
  // Forest edges of v with weight >= k.
  std::size_t edges_at_least(VertexId v, std::uint32_t k) const {
    if (k > max_weight(v)) return 0;
    return cumulative_[cumulative_offsets_[v] + k];
  }

  std::size_t total_members() const { return members_.size(); }
  std::size_t total_forest_edges() const { return forest_.size(); }
  // Stored elements: member entries plus forest edges.
  std::size_t storage() const { return total_members() + total_forest_edges(); }

 private:
  std::vector<ExternalId> external_;
  std::vector<std::size_t> member_offsets_{0};
  std::vector<VertexId> members_;
  std::vector<std::size_t> forest_offsets_{0};
  std::vector<ForestEdge> forest_;
  std::vector<std::size_t> cumulative_offsets_{0};
  std::vector<std::uint32_t> cumulative_;
};

TsdIndex build_tsd(const Graph& g, const IndexBuildOptions& opts = {});

// Components of the forest edges with weight >= k.
ScoreRecord tsd_score(const TsdIndex& idx, VertexId v, std::uint32_t k, bool with_contexts = true);

// floor(|{forest edges with weight >= k}| / (k - 1)): each context spans
// at least k vertices, hence at least k - 1 forest edges.
std::uint32_t tsd_upper_bound(const TsdIndex& idx, VertexId v, std::uint32_t k);

TopRResult tsd_topr(const TsdIndex& idx, const SearchOptions& opts);

// Versioned JSON container with external ids:
// {"format":"tsd","version":1,"vertices":[{"id":..,"members":[..],"edges":[[u,w,weight],..]},..]}
void save_tsd(const TsdIndex& idx, std::ostream& out);
void save_tsd(const TsdIndex& idx, const std::filesystem::path& path);
TsdIndex load_tsd(std::istream& in);
TsdIndex load_tsd(const std::filesystem::path& path);

}  // namespace trussdiv
