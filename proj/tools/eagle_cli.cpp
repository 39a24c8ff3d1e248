// Command-line front end. Everything algorithmic happens behind the C API
// in libeagle; this file only parses flags, shuttles strings and formats
// the run record. Results go to stdout (or --output), diagnostics to
// stderr; the exit status is 0 exactly when a result was produced.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eagle/eagle.h"

namespace {

using Json = nlohmann::ordered_json;

struct GraphDeleter {
  void operator()(eagle_graph* g) const { eagle_graph_free(g); }
};
struct CliquesDeleter {
  void operator()(eagle_cliques* c) const { eagle_cliques_free(c); }
};
struct ResultDeleter {
  void operator()(eagle_result* r) const { eagle_result_free(r); }
};
struct HierarchyDeleter {
  void operator()(eagle_hierarchy* h) const { eagle_hierarchy_free(h); }
};

using GraphPtr = std::unique_ptr<eagle_graph, GraphDeleter>;
using CliquesPtr = std::unique_ptr<eagle_cliques, CliquesDeleter>;
using ResultPtr = std::unique_ptr<eagle_result, ResultDeleter>;
using HierarchyPtr = std::unique_ptr<eagle_hierarchy, HierarchyDeleter>;

std::string takeString(char* text) {
  std::string out = text ? text : "";
  eagle_string_free(text);
  return out;
}

struct CommonOptions {
  std::string input;
  std::string kind = "edgelist";
  std::string symmetrize = "sum";
  double weightThreshold = 0.0;
  std::string format = "structured";
  std::string output = "-";
};

void addCommonFlags(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--input", opts.input, "Input file path")->required();
  cmd->add_option("--kind", opts.kind, "Input kind")
      ->check(CLI::IsMember({"edgelist", "coauthor"}))
      ->capture_default_str();
  cmd->add_option("--symmetrize", opts.symmetrize,
                  "How reciprocal/duplicate pairs combine")
      ->check(CLI::IsMember({"sum", "max", "none"}))
      ->capture_default_str();
  cmd->add_option("--weight-threshold", opts.weightThreshold,
                  "Drop combined edges with weight strictly below this")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"structured", "text"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output, "Output path ('-' = stdout)")
      ->capture_default_str();
}

eagle_input_kind kindOf(const CommonOptions& opts) {
  return opts.kind == "coauthor" ? EAGLE_INPUT_COAUTHOR : EAGLE_INPUT_EDGELIST;
}

eagle_symmetrize symmetrizeOf(const CommonOptions& opts) {
  if (opts.symmetrize == "max") return EAGLE_SYMMETRIZE_MAX;
  if (opts.symmetrize == "none") return EAGLE_SYMMETRIZE_NONE;
  return EAGLE_SYMMETRIZE_SUM;
}

eagle_format formatOf(const CommonOptions& opts) {
  return opts.format == "text" ? EAGLE_FORMAT_TEXT : EAGLE_FORMAT_JSON;
}

int fail(eagle_status status) {
  std::fprintf(stderr, "eagle: %s: %s\n", eagle_status_name(status),
               eagle_last_error());
  return 1;
}

GraphPtr loadGraph(const CommonOptions& opts, int& exitCode) {
  eagle_graph* g = nullptr;
  const eagle_status status =
      eagle_graph_from_file(opts.input.c_str(), kindOf(opts), symmetrizeOf(opts),
                            opts.weightThreshold, &g);
  if (status != EAGLE_OK) {
    exitCode = fail(status);
    return nullptr;
  }
  return GraphPtr(g);
}

Json configEcho(const CommonOptions& opts, const std::optional<int>& k,
                const std::optional<int>& maxDepth,
                const std::optional<std::string>& algorithm,
                const std::optional<uint64_t>& cliqueCap,
                const std::optional<uint32_t>& progressEvery) {
  Json config;
  config["input"] = opts.input;
  config["kind"] = opts.kind;
  config["symmetrize"] = opts.symmetrize;
  config["weight_threshold"] = opts.weightThreshold;
  config["k"] = k.has_value() ? Json(*k) : Json(nullptr);
  config["max_depth"] = maxDepth.has_value() ? Json(*maxDepth) : Json(nullptr);
  config["algorithm"] = algorithm.has_value() ? Json(*algorithm) : Json(nullptr);
  config["format"] = opts.format;
  config["output"] = opts.output;
  config["clique_cap"] = cliqueCap.has_value() ? Json(*cliqueCap) : Json(nullptr);
  config["progress_every"] =
      progressEvery.has_value() ? Json(*progressEvery) : Json(nullptr);
  return config;
}

Json graphEcho(const eagle_graph* g) {
  return Json{{"n", eagle_graph_vertex_count(g)}, {"m", eagle_graph_edge_count(g)}};
}

int emit(const CommonOptions& opts, const std::string& payload) {
  if (opts.output == "-") {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return 0;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "eagle: io error: cannot open output: %s\n",
                 opts.output.c_str());
    return 1;
  }
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  return out.good() ? 0 : 1;
}

int emitRecord(const CommonOptions& opts, const char* command, Json config,
               const eagle_graph* g, const char* payloadKey, Json payload) {
  Json record;
  record["command"] = command;
  record["config"] = std::move(config);
  record["graph"] = graphEcho(g);
  record[payloadKey] = std::move(payload);
  return emit(opts, record.dump(2) + "\n");
}

void warnUnusualK(int k) {
  if (k < 3 || k > 6) {
    std::fprintf(stderr,
                 "eagle: warning: clique threshold k=%d is outside the typical "
                 "range [3,6]\n",
                 k);
  }
}

// ---------------------------------------------------------------- commands

int cmdStats(const CommonOptions& opts) {
  int exitCode = 0;
  GraphPtr g = loadGraph(opts, exitCode);
  if (!g) return exitCode;
  char* text = nullptr;
  const eagle_status status = eagle_graph_summary(g.get(), formatOf(opts), &text);
  if (status != EAGLE_OK) return fail(status);
  std::string payload = takeString(text);
  if (opts.format == "text") return emit(opts, payload);
  return emitRecord(opts, "stats",
                    configEcho(opts, std::nullopt, std::nullopt, std::nullopt,
                               std::nullopt, std::nullopt),
                    g.get(), "summary", Json::parse(payload));
}

int cmdCliques(const CommonOptions& opts, std::optional<int> k,
               uint64_t cliqueCap) {
  if (k.has_value()) warnUnusualK(*k);
  int exitCode = 0;
  GraphPtr g = loadGraph(opts, exitCode);
  if (!g) return exitCode;
  eagle_cliques* raw = nullptr;
  eagle_status status = eagle_graph_maximal_cliques(g.get(), cliqueCap, &raw);
  if (status != EAGLE_OK) return fail(status);
  CliquesPtr cliques(raw);
  char* text = nullptr;
  status = eagle_cliques_report(cliques.get(), k.value_or(0), formatOf(opts), &text);
  if (status != EAGLE_OK) return fail(status);
  std::string payload = takeString(text);
  if (opts.format == "text") return emit(opts, payload);
  return emitRecord(opts, "cliques",
                    configEcho(opts, k, std::nullopt, std::nullopt, cliqueCap,
                               std::nullopt),
                    g.get(), "cliques", Json::parse(payload));
}

int cmdDetect(const CommonOptions& opts, const std::string& algorithm, int k,
              uint64_t cliqueCap, uint32_t progressEvery, bool withDendrogram) {
  if (algorithm != "cnm") warnUnusualK(k);
  int exitCode = 0;
  GraphPtr g = loadGraph(opts, exitCode);
  if (!g) return exitCode;
  eagle_options options;
  eagle_options_init(&options);
  options.k = k;
  options.clique_cap = cliqueCap;
  options.progress_every = progressEvery;
  const eagle_algorithm algo = algorithm == "cnm"   ? EAGLE_ALGO_CNM
                               : algorithm == "cpm" ? EAGLE_ALGO_CPM
                                                    : EAGLE_ALGO_EAGLE;
  eagle_result* raw = nullptr;
  eagle_status status = eagle_detect(g.get(), algo, &options, &raw);
  if (status != EAGLE_OK) return fail(status);
  ResultPtr result(raw);
  char* text = nullptr;
  status = eagle_result_report(result.get(), withDendrogram ? 1 : 0, formatOf(opts),
                               &text);
  if (status != EAGLE_OK) return fail(status);
  std::string payload = takeString(text);
  if (opts.format == "text") return emit(opts, payload);
  return emitRecord(opts, "detect",
                    configEcho(opts, k, std::nullopt, algorithm, cliqueCap,
                               progressEvery),
                    g.get(), "result", Json::parse(payload));
}

int cmdHierarchy(const CommonOptions& opts, int k, int maxDepth,
                 uint64_t cliqueCap, uint32_t progressEvery) {
  warnUnusualK(k);
  int exitCode = 0;
  GraphPtr g = loadGraph(opts, exitCode);
  if (!g) return exitCode;
  eagle_options options;
  eagle_options_init(&options);
  options.k = k;
  options.max_depth = maxDepth;
  options.clique_cap = cliqueCap;
  options.progress_every = progressEvery;
  eagle_hierarchy* raw = nullptr;
  eagle_status status = eagle_detect_hierarchy(g.get(), &options, &raw);
  if (status != EAGLE_OK) return fail(status);
  HierarchyPtr hierarchy(raw);
  char* text = nullptr;
  status = eagle_hierarchy_report(hierarchy.get(), formatOf(opts), &text);
  if (status != EAGLE_OK) return fail(status);
  std::string payload = takeString(text);
  if (opts.format == "text") return emit(opts, payload);
  return emitRecord(opts, "hierarchy",
                    configEcho(opts, k, maxDepth, std::string("eagle"), cliqueCap,
                               progressEvery),
                    g.get(), "hierarchy", Json::parse(payload));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eagle - overlapping and hierarchical community detection"};
  app.require_subcommand(1);

  CommonOptions statsOpts, cliquesOpts, detectOpts, hierarchyOpts;
  std::optional<int> cliquesK;
  int detectK = 4, hierarchyK = 4, maxDepth = 3;
  uint64_t cliquesCap = 10000000, detectCap = 10000000, hierarchyCap = 10000000;
  uint32_t detectProgress = 0, hierarchyProgress = 0;
  std::string algorithm = "eagle";
  bool withDendrogram = false;

  CLI::App* stats = app.add_subcommand("stats", "Graph summary statistics");
  addCommonFlags(stats, statsOpts);

  CLI::App* cliques = app.add_subcommand("cliques", "List maximal cliques");
  addCommonFlags(cliques, cliquesOpts);
  cliques->add_option("-k", cliquesK, "List only cliques of at least this size")
      ->check(CLI::Range(2, 1000000));
  cliques->add_option("--clique-cap", cliquesCap, "Abort beyond this many cliques")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* detect = app.add_subcommand("detect", "Detect community structure");
  addCommonFlags(detect, detectOpts);
  detect->add_option("-k", detectK, "Clique size threshold")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  detect->add_option("--algorithm", algorithm, "Detection algorithm")
      ->check(CLI::IsMember({"eagle", "cnm", "cpm"}))
      ->capture_default_str();
  detect->add_option("--clique-cap", detectCap, "Abort beyond this many cliques")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  detect->add_option("--progress-every", detectProgress,
                     "Report progress to stderr every N merges (0 = off)")
      ->capture_default_str();
  detect->add_flag("--dendrogram", withDendrogram, "Include the dendrogram");

  CLI::App* hierarchy =
      app.add_subcommand("hierarchy", "Detect recursive community hierarchy");
  addCommonFlags(hierarchy, hierarchyOpts);
  hierarchy->add_option("-k", hierarchyK, "Clique size threshold")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  hierarchy->add_option("--max-depth", maxDepth, "Recursion depth limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  hierarchy
      ->add_option("--clique-cap", hierarchyCap, "Abort beyond this many cliques")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  hierarchy
      ->add_option("--progress-every", hierarchyProgress,
                   "Report progress to stderr every N merges (0 = off)")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (stats->parsed()) return cmdStats(statsOpts);
  if (cliques->parsed()) return cmdCliques(cliquesOpts, cliquesK, cliquesCap);
  if (detect->parsed()) {
    return cmdDetect(detectOpts, algorithm, detectK, detectCap, detectProgress,
                     withDendrogram);
  }
  if (hierarchy->parsed()) {
    return cmdHierarchy(hierarchyOpts, hierarchyK, maxDepth, hierarchyCap,
                        hierarchyProgress);
  }
  return 1;
}
