#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "baselines.hpp"

namespace eagle {

// Insertion-ordered JSON keeps records readable and byte-stable.
using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal representation, identical across runs.
std::string formatDouble(double value);

/// Everything a detection run produces, independent of the algorithm.
struct DetectionResult {
  std::string algorithm;  // "eagle", "cnm" or "cpm"
  Cover cover;
  double score = 0.0;
  bool scoreIsEq = true;  // EQ for covers, Q for partitions
  std::vector<CurvePoint> curve;               // eagle only
  std::optional<Dendrogram> dendrogram;        // eagle and cnm
  std::vector<VertexId> unclassified;          // cpm only
};

Json graphSummaryJson(const Graph& g);
std::string graphSummaryText(const Graph& g);

/// Clique listing: one clique per line, member labels sorted, lines sorted
/// lexicographically, then a `#` summary line with the count, the size
/// histogram and the number of vertices outside every listed clique.
/// `minSize` 0 lists everything. Subordinate classification is always
/// relative to the full list.
Json cliqueReportJson(const Graph& g, const std::vector<Clique>& all, int minSize);
std::string cliqueReportText(const Graph& g, const std::vector<Clique>& all,
                             int minSize);

Json coverJson(const Graph& g, const Cover& cover);
Json dendrogramJson(const Graph& g, const Dendrogram& d);
std::string dendrogramText(const Graph& g, const Dendrogram& d);

Json detectionJson(const Graph& g, const DetectionResult& result,
                   bool includeDendrogram);
std::string detectionText(const Graph& g, const DetectionResult& result,
                          bool includeDendrogram);

Json hierarchyJson(const Graph& g, const HierarchyNode& root);
std::string hierarchyText(const Graph& g, const HierarchyNode& root);

}  // namespace eagle
