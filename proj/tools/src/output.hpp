#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "trussdiv/graph.hpp"
#include "trussdiv/search.hpp"

namespace trussdiv::cli {

enum class Format { kJson, kTsv };

nlohmann::json to_json(const ScoreRecord& rec, bool with_contexts);
nlohmann::json to_json(const TopRResult& result, bool with_contexts);
nlohmann::json to_json(const GraphStats& s);

// One "vertex<TAB>score[<TAB>contexts]" line per record; contexts are
// comma-separated members joined by '|'.
void write_tsv(const TopRResult& result, bool with_contexts, std::ostream& out);

/// Machine-readable summary of one command: parameters, graph size,
/// search space, per-phase wall times and the result digest.
struct RunReport {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::optional<GraphStats> graph;
  std::optional<std::size_t> search_space;
  double load = 0.0;
  double sparsify = 0.0;
  double bound = 0.0;
  double score = 0.0;
  double total = 0.0;
  std::string digest;
  nlohmann::json extra = nlohmann::json::object();

  void add_phases(const PhaseTimes& p) {
    sparsify += p.sparsify;
    bound += p.bound;
    score += p.score;
  }
  nlohmann::json to_json() const;
};

// Single JSON line to `path` when given, else to stderr.
void emit_report(const RunReport& report, const std::optional<std::filesystem::path>& path);

}  // namespace trussdiv::cli
