#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace eagle {

using VertexId = std::uint32_t;

/// One record of a raw input edge list, before any preprocessing.
struct EdgeRecord {
  std::string source;
  std::string target;
  double weight = 1.0;
};

/// Raw parsed input. May contain reciprocal pairs, duplicates, self-loops
/// and weights; buildGraph() turns it into a simple undirected graph.
struct WeightedEdgeList {
  std::vector<EdgeRecord> edges;
  bool directed = true;
};

/// How reciprocal/duplicate pairs are combined during graph construction.
/// None rejects the input if any unordered pair occurs more than once.
enum class Symmetrize { Sum, Max, None };

/// Simple undirected unweighted graph. Vertices carry dense ids 0..n-1
/// assigned in lexicographic label order; adjacency lists are sorted.
/// Immutable after construction, safe for concurrent reads.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from final labels (index = vertex id) and undirected
  /// id pairs. Rejects self-loops and out-of-range ids; parallel edges
  /// collapse to one. Labels may include isolated vertices.
  static Graph fromEdges(std::vector<std::string> labels,
                         std::vector<std::pair<VertexId, VertexId>> edges);

  std::size_t vertexCount() const { return adj_.size(); }
  std::size_t edgeCount() const { return edgeCount_; }

  std::size_t degree(VertexId v) const { return adj_[v].size(); }
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  bool hasEdge(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  double averageDegree() const;

  /// Mean local clustering coefficient over all vertices; vertices of
  /// degree < 2 contribute 0.
  double averageClustering() const;

  /// Subgraph induced by `vertices` (duplicates ignored). Local ids follow
  /// ascending original id order, so labels stay lexicographically sorted.
  Graph inducedSubgraph(std::span<const VertexId> vertices) const;

private:
  Graph(std::vector<std::string> labels, std::vector<std::vector<VertexId>> adj,
        std::size_t edgeCount);
  void validate() const;

  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edgeCount_ = 0;
};

/// Parses `u v [w]` lines; `#`-comments and blank lines are skipped and a
/// missing weight defaults to 1.0. Malformed lines raise ParseError with
/// the 1-based line number.
WeightedEdgeList parseEdgeList(std::string_view text);

/// Parses one author list per line (whitespace separated labels), with the
/// same comment/blank-line convention as edge lists.
std::vector<std::vector<std::string>> parseAuthorLists(std::string_view text);

/// Accumulates co-authorship weights: a paper with n >= 2 authors adds
/// 1/(n-1) to every unordered author pair; single-author papers contribute
/// nothing. A duplicate author within one paper is an input error.
WeightedEdgeList coauthorshipWeights(
    const std::vector<std::vector<std::string>>& papers);

/// Preprocesses a raw edge list into a Graph: reciprocal/duplicate pairs
/// are combined per `mode`, combined weights strictly below
/// `weightThreshold` are dropped, self-loops are removed, and vertices
/// left without edges are omitted.
Graph buildGraph(const WeightedEdgeList& input, Symmetrize mode,
                 double weightThreshold);

}  // namespace eagle
