#include "trussdiv/index_file.hpp"

#include <fstream>
#include <sstream>

#include "index_json.hpp"

namespace trussdiv {

AnyIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open index file: " + path.string());
  // The format tag sits at the start of both containers.
  std::string head(64, '\0');
  in.read(head.data(), static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<std::size_t>(in.gcount()));
  in.clear();
  in.seekg(0);
  if (head.find("\"format\":\"tsd\"") != std::string::npos) return load_tsd(in);
  if (head.find("\"format\":\"gct\"") != std::string::npos) return load_gct(in);

  // Not written by us; parse fully to find the tag.
  try {
    const auto doc = nlohmann::json::parse(in);
    const std::string format = doc.is_object() ? doc.value("format", "") : "";
    std::istringstream again(doc.dump());
    if (format == "tsd") return load_tsd(again);
    if (format == "gct") return load_gct(again);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed index file: ") + e.what());
  }
  throw InputError("unknown index format in " + path.string());
}

TopRResult query_index(const AnyIndex& idx, const SearchOptions& opts) {
  return std::visit(
      [&opts](const auto& index) -> TopRResult {
        using T = std::decay_t<decltype(index)>;
        if constexpr (std::is_same_v<T, TsdIndex>) {
          return tsd_topr(index, opts);
        } else {
          return gct_topr(index, opts);
        }
      },
      idx);
}

}  // namespace trussdiv
