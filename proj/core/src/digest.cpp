#include "trussdiv/digest.hpp"

#include <cstdio>

namespace trussdiv {

std::string result_digest(const TopRResult& result) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& rec : result.records) feed(std::to_string(rec.vertex) + ':' + std::to_string(rec.score) + ';');
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace trussdiv
