#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace eagle {

namespace {

std::vector<std::string> memberLabels(const Graph& g,
                                      const std::vector<VertexId>& members) {
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (VertexId v : members) labels.push_back(g.label(v));
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::string joinLabels(const std::vector<std::string>& labels) {
  std::string line;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) line += ' ';
    line += labels[i];
  }
  return line;
}

// Communities sorted by their label sequence for stable, readable listings.
std::vector<std::vector<std::string>> sortedCommunityLabels(const Graph& g,
                                                            const Cover& cover) {
  std::vector<std::vector<std::string>> out;
  out.reserve(cover.communities.size());
  for (const auto& c : cover.communities) out.push_back(memberLabels(g, c.members));
  std::sort(out.begin(), out.end());
  return out;
}

Json membershipJson(const Graph& g, const Cover& cover) {
  Json counts = Json::object();
  for (VertexId v = 0; v < cover.membershipCount.size(); ++v) {
    if (cover.membershipCount[v] > 0) counts[g.label(v)] = cover.membershipCount[v];
  }
  return counts;
}

}  // namespace

std::string formatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

Json graphSummaryJson(const Graph& g) {
  return Json{{"n", g.vertexCount()},
              {"m", g.edgeCount()},
              {"avg_degree", g.averageDegree()},
              {"avg_clustering", g.averageClustering()}};
}

std::string graphSummaryText(const Graph& g) {
  std::string out;
  out += "n " + std::to_string(g.vertexCount()) + "\n";
  out += "m " + std::to_string(g.edgeCount()) + "\n";
  out += "avg_degree " + formatDouble(g.averageDegree()) + "\n";
  out += "avg_clustering " + formatDouble(g.averageClustering()) + "\n";
  return out;
}

namespace {

struct CliqueListing {
  std::vector<const Clique*> listed;
  std::map<std::size_t, std::size_t> sizeHistogram;
  std::vector<VertexId> outsideVertices;
  std::size_t subordinateListed = 0;
  std::vector<bool> flags;  // relative to the full list
};

CliqueListing buildListing(const Graph& g, const std::vector<Clique>& all,
                           int minSize) {
  CliqueListing listing;
  listing.flags = subordinateFlags(g, all);
  std::vector<bool> covered(g.vertexCount(), false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].size() < static_cast<std::size_t>(std::max(minSize, 0))) continue;
    listing.listed.push_back(&all[i]);
    ++listing.sizeHistogram[all[i].size()];
    if (listing.flags[i]) ++listing.subordinateListed;
    for (VertexId v : all[i]) covered[v] = true;
  }
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    if (!covered[v]) listing.outsideVertices.push_back(v);
  }
  return listing;
}

std::string histogramString(const std::map<std::size_t, std::size_t>& histogram) {
  std::string out;
  for (const auto& [size, count] : histogram) {
    if (!out.empty()) out += ',';
    out += std::to_string(size) + ':' + std::to_string(count);
  }
  return out;
}

}  // namespace

Json cliqueReportJson(const Graph& g, const std::vector<Clique>& all, int minSize) {
  CliqueListing listing = buildListing(g, all, minSize);
  Json cliques = Json::array();
  Json subordinate = Json::array();
  for (std::size_t i = 0; i < listing.listed.size(); ++i) {
    cliques.push_back(memberLabels(g, *listing.listed[i]));
  }
  for (std::size_t i = 0, j = 0; i < all.size(); ++i) {
    if (all[i].size() < static_cast<std::size_t>(std::max(minSize, 0))) continue;
    if (listing.flags[i]) subordinate.push_back(j);
    ++j;
  }
  Json histogram = Json::object();
  for (const auto& [size, count] : listing.sizeHistogram) {
    histogram[std::to_string(size)] = count;
  }
  return Json{{"count", listing.listed.size()},
              {"min_size", std::max(minSize, 0)},
              {"cliques", cliques},
              {"size_histogram", histogram},
              {"subordinate_clique_indices", subordinate},
              {"subordinate_vertex_count", listing.outsideVertices.size()},
              {"subordinate_vertices", memberLabels(g, listing.outsideVertices)}};
}

std::string cliqueReportText(const Graph& g, const std::vector<Clique>& all,
                             int minSize) {
  CliqueListing listing = buildListing(g, all, minSize);
  std::vector<std::string> lines;
  lines.reserve(listing.listed.size());
  for (const auto* c : listing.listed) lines.push_back(joinLabels(memberLabels(g, *c)));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  out += "# count=" + std::to_string(listing.listed.size()) +
         " sizes=" + histogramString(listing.sizeHistogram) +
         " subordinate_vertices=" + std::to_string(listing.outsideVertices.size()) +
         "\n";
  return out;
}

Json coverJson(const Graph& g, const Cover& cover) {
  Json communities = Json::array();
  for (const auto& labels : sortedCommunityLabels(g, cover)) {
    communities.push_back(labels);
  }
  return Json{{"num_communities", cover.communities.size()},
              {"communities", communities},
              {"membership_count", membershipJson(g, cover)}};
}

Json dendrogramJson(const Graph& g, const Dendrogram& d) {
  Json leaves = Json::array();
  for (const auto& leaf : d.leaves) leaves.push_back(memberLabels(g, leaf.members));
  Json merges = Json::array();
  for (const auto& mr : d.merges) {
    merges.push_back(Json{{"step", mr.step},
                          {"left", mr.left},
                          {"right", mr.right},
                          {"similarity", mr.similarity}});
  }
  return Json{{"leaves", leaves}, {"merges", merges}, {"roots", d.roots}};
}

std::string dendrogramText(const Graph& g, const Dendrogram& d) {
  std::string out = "dendrogram leaves=" + std::to_string(d.leaves.size()) +
                    " merges=" + std::to_string(d.merges.size()) + "\n";
  for (std::size_t i = 0; i < d.leaves.size(); ++i) {
    out += "  leaf " + std::to_string(i) + ": " +
           joinLabels(memberLabels(g, d.leaves[i].members)) + "\n";
  }
  for (const auto& mr : d.merges) {
    out += "  merge " + std::to_string(mr.step) + ": " + std::to_string(mr.left) +
           " + " + std::to_string(mr.right) + " similarity " +
           formatDouble(mr.similarity) + "\n";
  }
  return out;
}

Json detectionJson(const Graph& g, const DetectionResult& result,
                   bool includeDendrogram) {
  Json j;
  j["algorithm"] = result.algorithm;
  j[result.scoreIsEq ? "eq" : "q"] = result.score;
  Json cover = coverJson(g, result.cover);
  for (auto& [key, value] : cover.items()) j[key] = value;
  if (result.algorithm == "eagle") {
    Json curve = Json::array();
    for (const auto& point : result.curve) {
      curve.push_back(Json::array({point.communities, point.eq}));
    }
    j["eq_curve"] = curve;
  }
  if (result.algorithm == "cpm") {
    j["unclassified"] = memberLabels(g, result.unclassified);
  }
  if (includeDendrogram && result.dendrogram.has_value()) {
    j["dendrogram"] = dendrogramJson(g, *result.dendrogram);
  }
  return j;
}

std::string detectionText(const Graph& g, const DetectionResult& result,
                          bool includeDendrogram) {
  std::string out = "algorithm " + result.algorithm + "\n";
  out += std::string(result.scoreIsEq ? "eq " : "q ") + formatDouble(result.score) + "\n";
  out += "num_communities " + std::to_string(result.cover.communities.size()) + "\n";
  for (const auto& labels : sortedCommunityLabels(g, result.cover)) {
    out += "community " + joinLabels(labels) + "\n";
  }
  std::string overlaps;
  for (VertexId v = 0; v < result.cover.membershipCount.size(); ++v) {
    if (result.cover.membershipCount[v] > 1) {
      overlaps += (overlaps.empty() ? "" : " ") + g.label(v) + ":" +
                  std::to_string(result.cover.membershipCount[v]);
    }
  }
  if (!overlaps.empty()) out += "overlapping " + overlaps + "\n";
  if (result.algorithm == "eagle") {
    out += "eq_curve";
    for (const auto& point : result.curve) {
      out += " " + std::to_string(point.communities) + ":" + formatDouble(point.eq);
    }
    out += "\n";
  }
  if (result.algorithm == "cpm" && !result.unclassified.empty()) {
    out += "unclassified " + joinLabels(memberLabels(g, result.unclassified)) + "\n";
  }
  if (includeDendrogram && result.dendrogram.has_value()) {
    out += dendrogramText(g, *result.dendrogram);
  }
  return out;
}

namespace {

Json hierarchyNodeJson(const Graph& g, const HierarchyNode& node) {
  Json j;
  j["size"] = node.members.size();
  j["members"] = memberLabels(g, node.members);
  if (node.eqOfSplit.has_value()) {
    j["eq_of_split"] = *node.eqOfSplit;
  } else {
    j["eq_of_split"] = nullptr;
  }
  Json children = Json::array();
  for (const auto& child : node.children) children.push_back(hierarchyNodeJson(g, child));
  j["children"] = children;
  return j;
}

void hierarchyNodeText(const Graph& g, const HierarchyNode& node, int indent,
                       std::string& out) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += "- size=" + std::to_string(node.members.size());
  if (node.eqOfSplit.has_value()) out += " eq_of_split=" + formatDouble(*node.eqOfSplit);
  out += " members=" + joinLabels(memberLabels(g, node.members)) + "\n";
  for (const auto& child : node.children) {
    hierarchyNodeText(g, child, indent + 1, out);
  }
}

}  // namespace

Json hierarchyJson(const Graph& g, const HierarchyNode& root) {
  return hierarchyNodeJson(g, root);
}

std::string hierarchyText(const Graph& g, const HierarchyNode& root) {
  std::string out;
  hierarchyNodeText(g, root, 0, out);
  return out;
}

}  // namespace eagle
