#pragma once

#include <string>

#include "trussdiv/search.hpp"

namespace trussdiv {

// Stable 64-bit FNV-1a hash of the ordered (vertex, score) list, as 16 hex
// digits. Contexts and timings do not contribute.
std::string result_digest(const TopRResult& result);

}  // namespace trussdiv
