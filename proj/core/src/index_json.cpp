#include "index_json.hpp"

#include <string>

namespace trussdiv::detail {

std::vector<ExternalId> read_vertex_ids(const nlohmann::json& doc, const char* format) {
  if (!doc.is_object() || doc.value("format", "") != format) {
    throw InputError(std::string("not a ") + format + " index file");
  }
  if (doc.value("version", 0) != 1) throw InputError("unsupported index version");
  const auto& vertices = doc.at("vertices");
  std::vector<ExternalId> ids;
  ids.reserve(vertices.size());
  for (const auto& vj : vertices) ids.push_back(vj.at("id").get<ExternalId>());
  if (!std::is_sorted(ids.begin(), ids.end()) || std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw InputError("index vertices must be listed in strictly ascending id order");
  }
  return ids;
}

VertexId to_internal(std::span<const ExternalId> ids, ExternalId x) {
  auto it = std::lower_bound(ids.begin(), ids.end(), x);
  if (it == ids.end() || *it != x) throw InputError("index references unknown vertex " + std::to_string(x));
  return static_cast<VertexId>(it - ids.begin());
}

}  // namespace trussdiv::detail
