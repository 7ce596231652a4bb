#include "output.hpp"

#include <fstream>
#include <iostream>

namespace trussdiv::cli {

nlohmann::json to_json(const ScoreRecord& rec, bool with_contexts) {
  nlohmann::json j = {{"vertex", rec.vertex}, {"k", rec.k}, {"score", rec.score}};
  if (with_contexts) j["contexts"] = rec.contexts;
  if (rec.padded) j["padded"] = true;
  return j;
}

nlohmann::json to_json(const TopRResult& result, bool with_contexts) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& rec : result.records) list.push_back(to_json(rec, with_contexts));
  return list;
}

nlohmann::json to_json(const GraphStats& s) {
  nlohmann::json j = {{"vertices", s.vertices}, {"edges", s.edges}, {"max_degree", s.max_degree},
                      {"triangles", s.triangles}};
  if (s.max_edge_trussness) j["max_edge_trussness"] = *s.max_edge_trussness;
  return j;
}

void write_tsv(const TopRResult& result, bool with_contexts, std::ostream& out) {
  for (const auto& rec : result.records) {
    out << rec.vertex << '\t' << rec.score;
    if (with_contexts) {
      out << '\t';
      for (std::size_t c = 0; c < rec.contexts.size(); ++c) {
        if (c != 0) out << '|';
        for (std::size_t i = 0; i < rec.contexts[c].size(); ++i) {
          if (i != 0) out << ',';
          out << rec.contexts[c][i];
        }
      }
    }
    out << '\n';
  }
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j = {{"command", command}, {"params", params}};
  if (graph) j["graph"] = cli::to_json(*graph);
  if (search_space) j["search_space"] = *search_space;
  j["seconds"] = {{"load", load}, {"sparsify", sparsify}, {"bound", bound}, {"score", score}, {"total", total}};
  if (!digest.empty()) j["digest"] = digest;
  for (const auto& [key, value] : extra.items()) j[key] = value;
  return j;
}

void emit_report(const RunReport& report, const std::optional<std::filesystem::path>& path) {
  const std::string line = report.to_json().dump();
  if (path) {
    std::ofstream out(*path);
    if (!out) throw InputError("cannot write report " + path->string());
    out << line << '\n';
  } else {
    std::cerr << line << '\n';
  }
}

}  // namespace trussdiv::cli
