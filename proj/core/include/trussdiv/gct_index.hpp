#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trussdiv/diversity.hpp"
#include "trussdiv/ego.hpp"
#include "trussdiv/graph.hpp"
#include "trussdiv/search.hpp"
#include "trussdiv/truss.hpp"
#include "trussdiv/tsd_index.hpp"

namespace trussdiv {

// Superedge between supernodes a < b of the same vertex.
struct Superedge {
  std::uint32_t a;
  std::uint32_t b;
  std::uint32_t weight;

  friend bool operator==(const Superedge&, const Superedge&) = default;
};

/// Compressed forest of one ego-network. Supernode i has trussness tau[i]
/// and members[i] (local ids, ascending); supernodes are ordered by their
/// smallest member. Isolated ego members belong to no supernode.
struct EgoGct {
  std::vector<std::uint32_t> tau;
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<Superedge> superedges;
};

// Scans ego edges by trussness, heaviest first (ties in edge order). An
// edge between two unconnected supernodes merges them when both have the
// edge's trussness, and otherwise becomes a superedge.
EgoGct build_gct_ego(const EgoNetwork& ego, const TrussMap& tmap);

/// Supernode/superedge forests of every ego-network. Per vertex, the
/// counts N_k (supernodes with tau >= k) and M_k (superedges with weight
/// >= k) are stored as cumulative tables, so a score is N_k - M_k.
class GctIndex {
 public:
  struct Supernode {
    std::uint32_t tau;
    std::size_t first;  // into the flat member array
    std::size_t count;
  };

  GctIndex() = default;
  explicit GctIndex(std::vector<ExternalId> external_ids);

  // Vertices must be appended in internal id order; member ids are global.
  void append_vertex(std::span<const std::uint32_t> tau, std::span<const std::vector<VertexId>> members,
                     std::span<const Superedge> superedges);

  std::size_t vertex_count() const { return external_.size(); }
  ExternalId external_id(VertexId v) const { return external_[v]; }
  std::span<const ExternalId> external_ids() const { return external_; }
  std::optional<VertexId> internal_id(ExternalId id) const;
  void check_vertex(VertexId v) const;

  std::span<const Supernode> supernodes(VertexId v) const {
    return {nodes_.data() + node_offsets_[v], nodes_.data() + node_offsets_[v + 1]};
  }
  std::span<const VertexId> members(const Supernode& s) const { return {members_.data() + s.first, s.count}; }
  std::span<const Superedge> superedges(VertexId v) const {
    return {edges_.data() + edge_offsets_[v], edges_.data() + edge_offsets_[v + 1]};
  }

  std::uint32_t max_tau(VertexId v) const {
    return static_cast<std::uint32_t>(hist_offsets_[v + 1] - hist_offsets_[v]) - 1;
  }
  std::size_t supernodes_at_least(VertexId v, std::uint32_t k) const {
    return k > max_tau(v) ? 0 : node_hist_[hist_offsets_[v] + k];
  }
  std::size_t superedges_at_least(VertexId v, std::uint32_t k) const {
    return k > max_tau(v) ? 0 : edge_hist_[hist_offsets_[v] + k];
  }

  std::size_t total_supernodes() const { return nodes_.size(); }
  std::size_t total_superedges() const { return edges_.size(); }
  std::size_t total_member_entries() const { return members_.size(); }
  // Stored elements: supernodes plus superedges plus member entries.
  std::size_t storage() const { return total_supernodes() + total_superedges() + total_member_entries(); }

 private:
  std::vector<ExternalId> external_;
  std::vector<std::size_t> node_offsets_{0};
  std::vector<Supernode> nodes_;
  std::vector<VertexId> members_;
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<Superedge> edges_;
  std::vector<std::size_t> hist_offsets_{0};
  std::vector<std::uint32_t> node_hist_;
  std::vector<std::uint32_t> edge_hist_;
};

GctIndex build_gct(const Graph& g, const IndexBuildOptions& opts = {});

// N_k - M_k, O(1).
std::uint32_t gct_score(const GctIndex& idx, VertexId v, std::uint32_t k);

SocialContexts gct_contexts(const GctIndex& idx, VertexId v, std::uint32_t k);

// Scores every vertex from the count tables; contexts only for the answer.
TopRResult gct_topr(const GctIndex& idx, const SearchOptions& opts);

// Structural checks on a built or loaded index; returns a description of
// the first violation. Checks member partition, tau >= 2, the forest
// property, and that no superedge weight exceeds either endpoint's tau or
// equals both.
std::optional<std::string> check_gct_invariants(const GctIndex& idx);

// {"format":"gct","version":1,"vertices":[{"id":..,"supernodes":[{"tau":t,"members":[..]}],
//   "superedges":[[i,j,w],..]},..]}
void save_gct(const GctIndex& idx, std::ostream& out);
void save_gct(const GctIndex& idx, const std::filesystem::path& path);
GctIndex load_gct(std::istream& in);
GctIndex load_gct(const std::filesystem::path& path);

}  // namespace trussdiv
