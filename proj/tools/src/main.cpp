// trussdiv command-line tool.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "output.hpp"
#include "trussdiv/digest.hpp"
#include "trussdiv/diversity.hpp"
#include "trussdiv/gct_index.hpp"
#include "trussdiv/generators.hpp"
#include "trussdiv/graph.hpp"
#include "trussdiv/index_file.hpp"
#include "trussdiv/search.hpp"
#include "trussdiv/truss.hpp"
#include "trussdiv/tsd_index.hpp"
#if TRUSSDIV_WITH_ORACLE
#include "trussdiv/oracle.hpp"
#endif

namespace trussdiv::cli {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

constexpr std::size_t kDefaultR = 100;

struct QueryFlags {
  std::optional<std::size_t> r;
  std::uint32_t k = 3;
  bool contexts = false;
  bool tsv = false;
  bool pad = false;
  unsigned threads = 1;
  std::optional<std::filesystem::path> report;

  // Without --r the default of 100 is capped at n; an explicit r is
  // validated as given.
  SearchOptions options(std::size_t n) const {
    SearchOptions o;
    o.r = r ? *r : std::min(kDefaultR, std::max<std::size_t>(n, 1));
    o.k = k;
    o.with_contexts = contexts;
    o.pad_with_zero = pad;
    o.threads = threads;
    return o;
  }
};

void add_query_flags(CLI::App* cmd, QueryFlags& f, bool with_threads) {
  cmd->add_option("--r", f.r, "number of answers (default 100, capped at n)")->check(CLI::PositiveNumber);
  cmd->add_option("--k", f.k, "trussness threshold, >= 2")->capture_default_str();
  cmd->add_flag("--contexts", f.contexts, "include social contexts");
  auto* json_flag = cmd->add_flag("--json", "JSON output (default)");
  auto* tsv_flag = cmd->add_flag("--tsv", f.tsv, "TSV output");
  json_flag->excludes(tsv_flag);
  cmd->add_flag("--pad", f.pad, "fill the answer up to r with zero-score vertices");
  if (with_threads) cmd->add_option("--threads", f.threads, "worker threads, 0 = all cores")->capture_default_str();
  cmd->add_option("--report", f.report, "write the run report here instead of stderr");
}

struct Loaded {
  Graph graph;
  LoadSummary summary;
  double seconds = 0.0;
};

Loaded load(const std::string& path) {
  const auto t = Clock::now();
  Loaded out;
  out.graph = load_edge_list(path, &out.summary);
  out.seconds = since(t);
  return out;
}

GraphStats quick_stats(const Graph& g) {
  GraphStats s;
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  s.max_degree = g.max_degree();
  return s;
}

void print_result(const TopRResult& result, const SearchOptions& opts, const std::string& algo, bool tsv) {
  if (tsv) {
    write_tsv(result, opts.with_contexts, std::cout);
    return;
  }
  json j = {{"algo", algo}, {"k", opts.k}, {"r", opts.r}, {"results", to_json(result, opts.with_contexts)}};
  std::cout << j.dump() << '\n';
}

struct IndexRun {
  TopRResult result;
  double build_seconds = 0.0;
  std::size_t storage = 0;
};

IndexRun run_algo(const Graph& g, const std::string& algo, const SearchOptions& opts) {
  IndexRun run;
  if (algo == "online") {
    run.result = online_search(g, opts);
  } else if (algo == "bounded") {
    run.result = bounded_search(g, opts);
  } else {
    IndexBuildOptions b;
    b.threads = opts.threads;
    const auto t = Clock::now();
    if (algo == "tsd") {
      TsdIndex idx = build_tsd(g, b);
      run.build_seconds = since(t);
      run.storage = idx.storage();
      run.result = tsd_topr(idx, opts);
    } else {
      GctIndex idx = build_gct(g, b);
      run.build_seconds = since(t);
      run.storage = idx.storage();
      run.result = gct_topr(idx, opts);
    }
  }
  return run;
}

const std::vector<std::string> kAlgos = {"online", "bounded", "tsd", "gct"};

int run(int argc, char** argv) {
  CLI::App app{"Truss-based structural diversity: scores, top-r search and indexes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "trussdiv 0.1.0");

  // stats
  std::string graph_path;
  bool with_truss = false;
  auto* stats_cmd = app.add_subcommand("stats", "vertex, edge, degree and triangle counts");
  stats_cmd->add_option("graph", graph_path, "edge list")->required();
  stats_cmd->add_flag("--truss", with_truss, "also compute the maximum edge trussness");

  // decompose
  std::optional<std::filesystem::path> out_path;
  auto* decompose_cmd = app.add_subcommand("decompose", "edge trussness as \"u v tau\" lines");
  decompose_cmd->add_option("graph", graph_path, "edge list")->required();
  decompose_cmd->add_option("--out", out_path, "output file (default stdout)");

  // score
  ExternalId vertex = 0;
  std::uint32_t score_k = 3;
  bool score_contexts = false;
  auto* score_cmd = app.add_subcommand("score", "structural diversity of one vertex");
  score_cmd->add_option("graph", graph_path, "edge list")->required();
  score_cmd->add_option("--vertex", vertex, "external vertex id")->required();
  score_cmd->add_option("--k", score_k, "trussness threshold, >= 2")->capture_default_str();
  score_cmd->add_flag("--contexts", score_contexts, "include social contexts");

  // search
  QueryFlags q;
  std::string algo = "online";
  auto* search_cmd = app.add_subcommand("search", "top-r vertices by structural diversity");
  search_cmd->add_option("graph", graph_path, "edge list")->required();
  search_cmd->add_option("--algo", algo, "online, bounded, tsd or gct")
      ->check(CLI::IsMember(kAlgos))
      ->capture_default_str();
  add_query_flags(search_cmd, q, true);

  // build-index
  std::string index_type;
  std::filesystem::path index_out;
  unsigned build_threads = 1;
  std::optional<std::filesystem::path> build_report;
  auto* build_cmd = app.add_subcommand("build-index", "build a TSD or GCT index file");
  build_cmd->add_option("graph", graph_path, "edge list")->required();
  build_cmd->add_option("--type", index_type, "tsd or gct")->required()->check(CLI::IsMember({"tsd", "gct"}));
  build_cmd->add_option("--out", index_out, "index file")->required();
  build_cmd->add_option("--threads", build_threads, "worker threads, 0 = all cores")->capture_default_str();
  build_cmd->add_option("--report", build_report, "write the run report here instead of stderr");

  // query
  std::string index_path;
  auto* query_cmd = app.add_subcommand("query", "top-r query against an index file");
  query_cmd->add_option("index", index_path, "index file")->required();
  add_query_flags(query_cmd, q, false);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run all four algorithms and compare digests");
  bench_cmd->add_option("graph", graph_path, "edge list")->required();
  add_query_flags(bench_cmd, q, true);

  // generate
  std::string model = "holme-kim";
  std::size_t gen_n = 1000;
  std::size_t per_vertex = 5;
  double triad_p = 0.5;
  double er_p = 0.1;
  std::uint64_t seed = 1;
  auto* gen_cmd = app.add_subcommand("generate", "write a synthetic edge list");
  gen_cmd->add_option("--model", model, "holme-kim or er")
      ->check(CLI::IsMember({"holme-kim", "er"}))
      ->capture_default_str();
  gen_cmd->add_option("--n", gen_n, "vertices")->capture_default_str();
  gen_cmd->add_option("--edges-per-vertex", per_vertex, "holme-kim: edges added per vertex")->capture_default_str();
  gen_cmd->add_option("--triad-p", triad_p, "holme-kim: triangle closing probability")->capture_default_str();
  gen_cmd->add_option("--p", er_p, "er: edge probability")->capture_default_str();
  gen_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  gen_cmd->add_option("--out", out_path, "output file (default stdout)");

#if TRUSSDIV_WITH_ORACLE
  auto* oracle_cmd = app.add_subcommand("oracle", "");
  oracle_cmd->group("");
  oracle_cmd->add_option("graph", graph_path)->required();
  add_query_flags(oracle_cmd, q, false);
#endif

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = Clock::now();

  if (stats_cmd->parsed()) {
    Loaded in = load(graph_path);
    GraphStats s = stats(in.graph);
    if (with_truss) s.max_edge_trussness = truss_decompose(in.graph).max();
    json j = to_json(s);
    j["self_loops_dropped"] = in.summary.self_loops;
    j["duplicate_edges_dropped"] = in.summary.duplicate_edges;
    std::cout << j.dump() << '\n';
    return 0;
  }

  if (decompose_cmd->parsed()) {
    Loaded in = load(graph_path);
    TrussMap t = truss_decompose(in.graph);
    std::ofstream file;
    if (out_path) {
      file.open(*out_path);
      if (!file) throw InputError("cannot write " + out_path->string());
    }
    std::ostream& out = out_path ? file : std::cout;
    // Edge ids follow (u, v) order and internal order is external order.
    for (EdgeId e = 0; e < in.graph.edge_count(); ++e) {
      const Edge& uv = in.graph.edge(e);
      out << in.graph.external_id(uv.u) << ' ' << in.graph.external_id(uv.v) << ' ' << t[e] << '\n';
    }
    return 0;
  }

  if (score_cmd->parsed()) {
    Loaded in = load(graph_path);
    auto v = in.graph.internal_id(vertex);
    if (!v) throw InvalidArgument("vertex " + std::to_string(vertex) + " is not in the graph");
    std::cout << to_json(compute_score(in.graph, *v, score_k, score_contexts), score_contexts).dump() << '\n';
    return 0;
  }

  if (search_cmd->parsed()) {
    Loaded in = load(graph_path);
    const SearchOptions opts = q.options(in.graph.vertex_count());
    IndexRun r = run_algo(in.graph, algo, opts);
    print_result(r.result, opts, algo, q.tsv);

    RunReport rep;
    rep.command = "search";
    rep.params = {{"r", opts.r}, {"k", opts.k}, {"algo", algo}, {"threads", opts.threads}};
    rep.graph = quick_stats(in.graph);
    rep.search_space = r.result.search_space;
    rep.load = in.seconds;
    rep.add_phases(r.result.phases);
    if (algo == "tsd" || algo == "gct") {
      rep.extra["index_build_seconds"] = r.build_seconds;
      rep.extra["index_storage"] = r.storage;
    }
    rep.digest = result_digest(r.result);
    rep.total = since(start);
    emit_report(rep, q.report);
    return 0;
  }

  if (build_cmd->parsed()) {
    Loaded in = load(graph_path);
    IndexBuildOptions b;
    b.threads = build_threads;
    const auto t = Clock::now();
    RunReport rep;
    rep.command = "build-index";
    rep.params = {{"type", index_type}, {"threads", build_threads}};
    if (index_type == "tsd") {
      TsdIndex idx = build_tsd(in.graph, b);
      rep.extra["build_seconds"] = since(t);
      rep.extra["storage"] = idx.storage();
      rep.extra["forest_edges"] = idx.total_forest_edges();
      save_tsd(idx, index_out);
    } else {
      GctIndex idx = build_gct(in.graph, b);
      rep.extra["build_seconds"] = since(t);
      rep.extra["storage"] = idx.storage();
      rep.extra["supernodes"] = idx.total_supernodes();
      rep.extra["superedges"] = idx.total_superedges();
      save_gct(idx, index_out);
    }
    rep.graph = quick_stats(in.graph);
    rep.load = in.seconds;
    rep.total = since(start);
    emit_report(rep, build_report);
    return 0;
  }

  if (query_cmd->parsed()) {
    const auto t = Clock::now();
    AnyIndex idx = load_index(index_path);
    const double load_seconds = since(t);
    const std::size_t n = std::visit([](const auto& i) { return i.vertex_count(); }, idx);
    const std::string type = std::holds_alternative<TsdIndex>(idx) ? "tsd" : "gct";
    const SearchOptions opts = q.options(n);
    TopRResult result = query_index(idx, opts);
    print_result(result, opts, type, q.tsv);

    RunReport rep;
    rep.command = "query";
    rep.params = {{"r", opts.r}, {"k", opts.k}, {"algo", type}};
    rep.search_space = result.search_space;
    rep.load = load_seconds;
    rep.add_phases(result.phases);
    rep.digest = result_digest(result);
    rep.total = since(start);
    emit_report(rep, q.report);
    return 0;
  }

  if (bench_cmd->parsed()) {
    Loaded in = load(graph_path);
    const SearchOptions opts = q.options(in.graph.vertex_count());
    json runs = json::array();
    std::string first_digest;
    bool equal = true;
    for (const auto& a : kAlgos) {
      IndexRun r = run_algo(in.graph, a, opts);
      const std::string digest = result_digest(r.result);
      if (first_digest.empty()) first_digest = digest;
      equal = equal && digest == first_digest;
      json entry = {{"algo", a},
                    {"search_space", r.result.search_space},
                    {"query_seconds", r.result.seconds},
                    {"digest", digest}};
      if (a == "tsd" || a == "gct") {
        entry["index_build_seconds"] = r.build_seconds;
        entry["index_storage"] = r.storage;
      }
      runs.push_back(entry);
    }
    json j = {{"graph", to_json(quick_stats(in.graph))},
              {"k", opts.k},
              {"r", opts.r},
              {"threads", opts.threads},
              {"runs", runs},
              {"digests_equal", equal}};
    std::cout << j.dump() << '\n';

    RunReport rep;
    rep.command = "bench";
    rep.params = {{"r", opts.r}, {"k", opts.k}, {"threads", opts.threads}};
    rep.graph = quick_stats(in.graph);
    rep.load = in.seconds;
    rep.digest = first_digest;
    rep.total = since(start);
    emit_report(rep, q.report);
    if (!equal) {
      std::cerr << "trussdiv: algorithms disagree on the answer\n";
      return 1;
    }
    return 0;
  }

  if (gen_cmd->parsed()) {
    Graph g = model == "er" ? erdos_renyi(gen_n, er_p, seed) : holme_kim(gen_n, per_vertex, triad_p, seed);
    if (out_path) {
      write_edge_list(g, *out_path);
    } else {
      write_edge_list(g, std::cout);
    }
    return 0;
  }

#if TRUSSDIV_WITH_ORACLE
  if (oracle_cmd->parsed()) {
    Loaded in = load(graph_path);
    const SearchOptions opts = q.options(in.graph.vertex_count());
    TopRResult result = oracle::oracle_topr(in.graph, opts.r, opts.k, in.graph.vertex_count());
    if (opts.pad_with_zero) detail::pad_with_zero(result, in.graph.external_ids(), opts.r, opts.k);
    print_result(result, opts, "oracle", q.tsv);
    return 0;
  }
#endif

  return 2;
}

}  // namespace
}  // namespace trussdiv::cli

int main(int argc, char** argv) {
  try {
    return trussdiv::cli::run(argc, argv);
  } catch (const trussdiv::InvalidArgument& e) {
    std::cerr << "trussdiv: " << e.what() << '\n';
    return 2;
  } catch (const trussdiv::InputError& e) {
    std::cerr << "trussdiv: " << e.what() << '\n';
    return 3;
  } catch (const trussdiv::ResourceCapError& e) {
    std::cerr << "trussdiv: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "trussdiv: " << e.what() << '\n';
    return 1;
  }
}
