#pragma once

#include <algorithm>
#include <nlohmann/json.hpp>
#include <span>
#include <vector>

#include "trussdiv/types.hpp"

namespace trussdiv::detail {

// Validated, strictly ascending vertex id table of a versioned index container.
std::vector<ExternalId> read_vertex_ids(const nlohmann::json& doc, const char* format);

VertexId to_internal(std::span<const ExternalId> ids, ExternalId x);

}  // namespace trussdiv::detail
