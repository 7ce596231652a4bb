#pragma once

#include <filesystem>
#include <variant>

#include "trussdiv/gct_index.hpp"
#include "trussdiv/tsd_index.hpp"

namespace trussdiv {

using AnyIndex = std::variant<TsdIndex, GctIndex>;

// Reads either index container, dispatching on its "format" field.
AnyIndex load_index(const std::filesystem::path& path);

TopRResult query_index(const AnyIndex& idx, const SearchOptions& opts);

}  // namespace trussdiv
