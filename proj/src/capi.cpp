#include "eagle/eagle.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "report.hpp"

struct eagle_graph_s {
  std::shared_ptr<const eagle::Graph> graph;
};

struct eagle_cliques_s {
  std::shared_ptr<const eagle::Graph> graph;
  std::vector<eagle::Clique> cliques;
  std::vector<bool> subordinate;
};

struct eagle_result_s {
  std::shared_ptr<const eagle::Graph> graph;
  eagle::DetectionResult result;
};

struct eagle_hierarchy_s {
  std::shared_ptr<const eagle::Graph> graph;
  eagle::HierarchyNode root;
  std::vector<const eagle::HierarchyNode*> nodes;  // preorder
  std::vector<std::int32_t> parents;
};

namespace {

thread_local std::string t_lastError;

eagle_status toStatus(eagle::Errc code) {
  switch (code) {
    case eagle::Errc::IoError: return EAGLE_ERR_IO;
    case eagle::Errc::ParseError: return EAGLE_ERR_PARSE;
    case eagle::Errc::InvalidArgument: return EAGLE_ERR_INVALID_ARGUMENT;
    case eagle::Errc::Conflict: return EAGLE_ERR_CONFLICT;
    case eagle::Errc::LimitExceeded: return EAGLE_ERR_LIMIT;
    case eagle::Errc::Internal: return EAGLE_ERR_INTERNAL;
  }
  return EAGLE_ERR_INTERNAL;
}

template <typename Fn>
eagle_status guarded(Fn&& fn) {
  try {
    fn();
    t_lastError.clear();
    return EAGLE_OK;
  } catch (const eagle::Error& error) {
    t_lastError = error.what();
    return toStatus(error.code());
  } catch (const std::bad_alloc&) {
    t_lastError = "out of memory";
    return EAGLE_ERR_INTERNAL;
  } catch (const std::exception& error) {
    t_lastError = error.what();
    return EAGLE_ERR_INTERNAL;
  }
}

void requireArg(bool condition, const char* message) {
  if (!condition) eagle::raise(eagle::Errc::InvalidArgument, message);
}

char* copyString(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

eagle::Symmetrize toSymmetrize(eagle_symmetrize mode) {
  switch (mode) {
    case EAGLE_SYMMETRIZE_SUM: return eagle::Symmetrize::Sum;
    case EAGLE_SYMMETRIZE_MAX: return eagle::Symmetrize::Max;
    case EAGLE_SYMMETRIZE_NONE: return eagle::Symmetrize::None;
  }
  eagle::raise(eagle::Errc::InvalidArgument, "unknown symmetrize mode");
}

eagle::Graph buildFromText(std::string_view text, eagle_input_kind kind,
                           eagle_symmetrize mode, double threshold) {
  switch (kind) {
    case EAGLE_INPUT_EDGELIST:
      return eagle::buildGraph(eagle::parseEdgeList(text), toSymmetrize(mode),
                               threshold);
    case EAGLE_INPUT_COAUTHOR:
      return eagle::buildGraph(
          eagle::coauthorshipWeights(eagle::parseAuthorLists(text)),
          toSymmetrize(mode), threshold);
  }
  eagle::raise(eagle::Errc::InvalidArgument, "unknown input kind");
}

eagle::ProgressFn makeProgress(std::uint32_t every) {
  if (every == 0) return {};
  return [every](std::size_t done, std::size_t total) {
    if (done % every == 0 || done == total) {
      std::fprintf(stderr, "eagle: merged %zu/%zu\n", done, total);
    }
  };
}

eagle_options effectiveOptions(const eagle_options* options) {
  eagle_options result;
  eagle_options_init(&result);
  if (options) result = *options;
  if (result.clique_cap == 0) result.clique_cap = eagle::kDefaultCliqueCap;
  return result;
}

void flattenHierarchy(const eagle::HierarchyNode& node, std::int32_t parent,
                      eagle_hierarchy_s& handle) {
  const auto index = static_cast<std::int32_t>(handle.nodes.size());
  handle.nodes.push_back(&node);
  handle.parents.push_back(parent);
  for (const auto& child : node.children) flattenHierarchy(child, index, handle);
}

std::vector<eagle::VertexId> unclassifiedOf(const eagle::Cover& cover) {
  std::vector<eagle::VertexId> out;
  for (eagle::VertexId v = 0; v < cover.membershipCount.size(); ++v) {
    if (cover.membershipCount[v] == 0) out.push_back(v);
  }
  return out;
}

}  // namespace

extern "C" {

const char* eagle_version(void) { return "1.0.0"; }

const char* eagle_status_name(eagle_status status) {
  switch (status) {
    case EAGLE_OK: return "ok";
    case EAGLE_ERR_IO: return "io error";
    case EAGLE_ERR_PARSE: return "parse error";
    case EAGLE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EAGLE_ERR_CONFLICT: return "conflict";
    case EAGLE_ERR_LIMIT: return "limit exceeded";
    case EAGLE_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* eagle_last_error(void) { return t_lastError.c_str(); }

eagle_status eagle_graph_from_text(const char* text, size_t len,
                                   eagle_input_kind kind, eagle_symmetrize mode,
                                   double weight_threshold, eagle_graph** out) {
  return guarded([&] {
    requireArg(out != nullptr, "output handle is null");
    requireArg(text != nullptr || len == 0, "input text is null");
    auto graph = buildFromText(std::string_view(text ? text : "", len), kind, mode,
                               weight_threshold);
    *out = new eagle_graph_s{
        std::make_shared<const eagle::Graph>(std::move(graph))};
  });
}

eagle_status eagle_graph_from_file(const char* path, eagle_input_kind kind,
                                   eagle_symmetrize mode, double weight_threshold,
                                   eagle_graph** out) {
  return guarded([&] {
    requireArg(out != nullptr, "output handle is null");
    requireArg(path != nullptr, "input path is null");
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
      eagle::raise(eagle::Errc::IoError, std::string("no such input: ") + path);
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    if (stream.bad()) {
      eagle::raise(eagle::Errc::IoError, std::string("failed to read: ") + path);
    }
    const std::string text = buffer.str();
    auto graph = buildFromText(text, kind, mode, weight_threshold);
    *out = new eagle_graph_s{
        std::make_shared<const eagle::Graph>(std::move(graph))};
  });
}

void eagle_graph_free(eagle_graph* graph) { delete graph; }

uint32_t eagle_graph_vertex_count(const eagle_graph* graph) {
  return graph ? static_cast<uint32_t>(graph->graph->vertexCount()) : 0;
}

uint64_t eagle_graph_edge_count(const eagle_graph* graph) {
  return graph ? static_cast<uint64_t>(graph->graph->edgeCount()) : 0;
}

double eagle_graph_avg_degree(const eagle_graph* graph) {
  return graph ? graph->graph->averageDegree() : 0.0;
}

double eagle_graph_avg_clustering(const eagle_graph* graph) {
  return graph ? graph->graph->averageClustering() : 0.0;
}

const char* eagle_graph_vertex_label(const eagle_graph* graph, uint32_t vertex) {
  if (!graph || vertex >= graph->graph->vertexCount()) return nullptr;
  return graph->graph->label(vertex).c_str();
}

eagle_status eagle_graph_summary(const eagle_graph* graph, eagle_format format,
                                 char** out) {
  return guarded([&] {
    requireArg(graph != nullptr, "graph handle is null");
    requireArg(out != nullptr, "output pointer is null");
    const auto& g = *graph->graph;
    *out = copyString(format == EAGLE_FORMAT_TEXT
                          ? eagle::graphSummaryText(g)
                          : eagle::graphSummaryJson(g).dump(2));
  });
}

eagle_status eagle_graph_maximal_cliques(const eagle_graph* graph, uint64_t cap,
                                         eagle_cliques** out) {
  return guarded([&] {
    requireArg(graph != nullptr, "graph handle is null");
    requireArg(out != nullptr, "output handle is null");
    auto handle = std::make_unique<eagle_cliques_s>();
    handle->graph = graph->graph;
    handle->cliques = eagle::enumerateMaximalCliques(
        *graph->graph, cap == 0 ? eagle::kDefaultCliqueCap : cap);
    handle->subordinate = eagle::subordinateFlags(*graph->graph, handle->cliques);
    *out = handle.release();
  });
}

void eagle_cliques_free(eagle_cliques* cliques) { delete cliques; }

size_t eagle_cliques_count(const eagle_cliques* cliques) {
  return cliques ? cliques->cliques.size() : 0;
}

size_t eagle_cliques_size(const eagle_cliques* cliques, size_t index) {
  if (!cliques || index >= cliques->cliques.size()) return 0;
  return cliques->cliques[index].size();
}

eagle_status eagle_cliques_members(const eagle_cliques* cliques, size_t index,
                                   uint32_t* buffer, size_t capacity,
                                   size_t* written) {
  return guarded([&] {
    requireArg(cliques != nullptr, "cliques handle is null");
    requireArg(index < cliques->cliques.size(), "clique index out of range");
    const auto& members = cliques->cliques[index];
    requireArg(buffer != nullptr || members.empty(), "member buffer is null");
    requireArg(capacity >= members.size(), "member buffer too small");
    std::copy(members.begin(), members.end(), buffer);
    if (written) *written = members.size();
  });
}

int eagle_cliques_subordinate(const eagle_cliques* cliques, size_t index) {
  if (!cliques || index >= cliques->cliques.size()) return 0;
  return cliques->subordinate[index] ? 1 : 0;
}

eagle_status eagle_cliques_report(const eagle_cliques* cliques, int min_size,
                                  eagle_format format, char** out) {
  return guarded([&] {
    requireArg(cliques != nullptr, "cliques handle is null");
    requireArg(out != nullptr, "output pointer is null");
    requireArg(min_size >= 0, "min_size must be non-negative");
    const auto& g = *cliques->graph;
    *out = copyString(
        format == EAGLE_FORMAT_TEXT
            ? eagle::cliqueReportText(g, cliques->cliques, min_size)
            : eagle::cliqueReportJson(g, cliques->cliques, min_size).dump(2));
  });
}

void eagle_options_init(eagle_options* options) {
  if (!options) return;
  options->k = 4;
  options->max_depth = 3;
  options->clique_cap = 0;
  options->progress_every = 0;
}

eagle_status eagle_detect(const eagle_graph* graph, eagle_algorithm algorithm,
                          const eagle_options* options, eagle_result** out) {
  return guarded([&] {
    requireArg(graph != nullptr, "graph handle is null");
    requireArg(out != nullptr, "output handle is null");
    const eagle_options opt = effectiveOptions(options);
    const auto& g = *graph->graph;
    eagle::DetectionResult result;
    switch (algorithm) {
      case EAGLE_ALGO_EAGLE: {
        auto run = eagle::runEagle(g, opt.k, opt.clique_cap,
                                   makeProgress(opt.progress_every));
        result.algorithm = "eagle";
        result.cover = std::move(run.cut.cover);
        result.score = run.cut.eq;
        result.scoreIsEq = true;
        result.curve = std::move(run.cut.curve);
        result.dendrogram = std::move(run.dendrogram);
        break;
      }
      case EAGLE_ALGO_CNM: {
        auto run = eagle::cnmGreedy(g);
        result.algorithm = "cnm";
        result.cover = eagle::partitionToCover(g, run.partition);
        result.score = run.q;
        result.scoreIsEq = false;
        result.dendrogram = std::move(run.dendrogram);
        break;
      }
      case EAGLE_ALGO_CPM: {
        auto cover = eagle::cpmCover(g, opt.k, opt.clique_cap);
        result.algorithm = "cpm";
        result.score = eagle::extendedModularity(g, cover);
        result.scoreIsEq = true;
        result.unclassified = unclassifiedOf(cover);
        result.cover = std::move(cover);
        break;
      }
      default:
        eagle::raise(eagle::Errc::InvalidArgument, "unknown algorithm");
    }
    *out = new eagle_result_s{graph->graph, std::move(result)};
  });
}

void eagle_result_free(eagle_result* result) { delete result; }

size_t eagle_result_community_count(const eagle_result* result) {
  return result ? result->result.cover.communities.size() : 0;
}

size_t eagle_result_community_size(const eagle_result* result, size_t index) {
  if (!result || index >= result->result.cover.communities.size()) return 0;
  return result->result.cover.communities[index].members.size();
}

eagle_status eagle_result_community_members(const eagle_result* result,
                                            size_t index, uint32_t* buffer,
                                            size_t capacity, size_t* written) {
  return guarded([&] {
    requireArg(result != nullptr, "result handle is null");
    requireArg(index < result->result.cover.communities.size(),
               "community index out of range");
    const auto& members = result->result.cover.communities[index].members;
    requireArg(buffer != nullptr || members.empty(), "member buffer is null");
    requireArg(capacity >= members.size(), "member buffer too small");
    std::copy(members.begin(), members.end(), buffer);
    if (written) *written = members.size();
  });
}

double eagle_result_score(const eagle_result* result) {
  return result ? result->result.score : 0.0;
}

uint32_t eagle_result_membership(const eagle_result* result, uint32_t vertex) {
  if (!result || vertex >= result->result.cover.membershipCount.size()) return 0;
  return result->result.cover.membershipCount[vertex];
}

size_t eagle_result_curve_length(const eagle_result* result) {
  return result ? result->result.curve.size() : 0;
}

eagle_status eagle_result_curve_point(const eagle_result* result, size_t index,
                                      uint32_t* num_communities, double* eq) {
  return guarded([&] {
    requireArg(result != nullptr, "result handle is null");
    requireArg(index < result->result.curve.size(), "curve index out of range");
    const auto& point = result->result.curve[index];
    if (num_communities) *num_communities = static_cast<uint32_t>(point.communities);
    if (eq) *eq = point.eq;
  });
}

size_t eagle_result_leaf_count(const eagle_result* result) {
  if (!result || !result->result.dendrogram.has_value()) return 0;
  return result->result.dendrogram->leaves.size();
}

size_t eagle_result_merge_count(const eagle_result* result) {
  if (!result || !result->result.dendrogram.has_value()) return 0;
  return result->result.dendrogram->merges.size();
}

eagle_status eagle_result_merge(const eagle_result* result, size_t index,
                                int32_t* left, int32_t* right,
                                double* similarity) {
  return guarded([&] {
    requireArg(result != nullptr, "result handle is null");
    requireArg(result->result.dendrogram.has_value(),
               "result carries no dendrogram");
    const auto& merges = result->result.dendrogram->merges;
    requireArg(index < merges.size(), "merge index out of range");
    if (left) *left = merges[index].left;
    if (right) *right = merges[index].right;
    if (similarity) *similarity = merges[index].similarity;
  });
}

eagle_status eagle_result_report(const eagle_result* result,
                                 int include_dendrogram, eagle_format format,
                                 char** out) {
  return guarded([&] {
    requireArg(result != nullptr, "result handle is null");
    requireArg(out != nullptr, "output pointer is null");
    const auto& g = *result->graph;
    *out = copyString(
        format == EAGLE_FORMAT_TEXT
            ? eagle::detectionText(g, result->result, include_dendrogram != 0)
            : eagle::detectionJson(g, result->result, include_dendrogram != 0)
                  .dump(2));
  });
}

eagle_status eagle_detect_hierarchy(const eagle_graph* graph,
                                    const eagle_options* options,
                                    eagle_hierarchy** out) {
  return guarded([&] {
    requireArg(graph != nullptr, "graph handle is null");
    requireArg(out != nullptr, "output handle is null");
    const eagle_options opt = effectiveOptions(options);
    eagle::DetectOptions detectOptions;
    detectOptions.minCliqueSize = opt.k;
    detectOptions.maxDepth = opt.max_depth;
    detectOptions.cliqueCap = opt.clique_cap;
    detectOptions.progress = makeProgress(opt.progress_every);
    auto handle = std::make_unique<eagle_hierarchy_s>();
    handle->graph = graph->graph;
    handle->root = eagle::detectHierarchy(*graph->graph, detectOptions);
    flattenHierarchy(handle->root, -1, *handle);
    *out = handle.release();
  });
}

void eagle_hierarchy_free(eagle_hierarchy* hierarchy) { delete hierarchy; }

size_t eagle_hierarchy_node_count(const eagle_hierarchy* hierarchy) {
  return hierarchy ? hierarchy->nodes.size() : 0;
}

int32_t eagle_hierarchy_node_parent(const eagle_hierarchy* hierarchy,
                                    size_t node) {
  if (!hierarchy || node >= hierarchy->parents.size()) return -1;
  return hierarchy->parents[node];
}

size_t eagle_hierarchy_node_size(const eagle_hierarchy* hierarchy, size_t node) {
  if (!hierarchy || node >= hierarchy->nodes.size()) return 0;
  return hierarchy->nodes[node]->members.size();
}

eagle_status eagle_hierarchy_node_members(const eagle_hierarchy* hierarchy,
                                          size_t node, uint32_t* buffer,
                                          size_t capacity, size_t* written) {
  return guarded([&] {
    requireArg(hierarchy != nullptr, "hierarchy handle is null");
    requireArg(node < hierarchy->nodes.size(), "node index out of range");
    const auto& members = hierarchy->nodes[node]->members;
    requireArg(buffer != nullptr || members.empty(), "member buffer is null");
    requireArg(capacity >= members.size(), "member buffer too small");
    std::copy(members.begin(), members.end(), buffer);
    if (written) *written = members.size();
  });
}

int eagle_hierarchy_node_has_split(const eagle_hierarchy* hierarchy,
                                   size_t node) {
  if (!hierarchy || node >= hierarchy->nodes.size()) return 0;
  return hierarchy->nodes[node]->eqOfSplit.has_value() ? 1 : 0;
}

double eagle_hierarchy_node_eq(const eagle_hierarchy* hierarchy, size_t node) {
  if (!hierarchy || node >= hierarchy->nodes.size()) return 0.0;
  return hierarchy->nodes[node]->eqOfSplit.value_or(0.0);
}

eagle_status eagle_hierarchy_report(const eagle_hierarchy* hierarchy,
                                    eagle_format format, char** out) {
  return guarded([&] {
    requireArg(hierarchy != nullptr, "hierarchy handle is null");
    requireArg(out != nullptr, "output pointer is null");
    const auto& g = *hierarchy->graph;
    *out = copyString(format == EAGLE_FORMAT_TEXT
                          ? eagle::hierarchyText(g, hierarchy->root)
                          : eagle::hierarchyJson(g, hierarchy->root).dump(2));
  });
}

void eagle_string_free(char* text) { std::free(text); }

}  // extern "C"
