#pragma once

#include "detect.hpp"

namespace eagle {

/// Non-overlapping, complete community assignment: one id per vertex.
struct Partition {
  std::vector<std::int32_t> assignment;
};

/// Plain Newman-Girvan modularity Q of a partition. An unassigned vertex
/// (negative id, or assignment shorter than the vertex set) is an error.
double modularityQ(const Graph& g, const Partition& p);

struct CnmResult {
  Dendrogram dendrogram;  // singleton leaves, one per vertex
  Partition partition;    // the maximum-Q state along the merge sequence
  double q = 0.0;
};

/// Greedy modularity agglomeration from singleton communities: repeatedly
/// merges the connected pair with the largest Q gain. On a disconnected
/// graph, merging stops when no connected pair remains; the returned
/// partition is the maximum-Q state, ties preferring the coarser one.
CnmResult cnmGreedy(const Graph& g);

/// Clique percolation cover: maximal cliques of size >= k are adjacent when
/// they share at least k-1 vertices; each connected component of that
/// relation contributes the union of its cliques as one community. Vertices
/// in no size->=k maximal clique are left unclassified. k < 3 is an error.
Cover cpmCover(const Graph& g, int k, std::uint64_t cliqueCap = kDefaultCliqueCap);

/// Views a partition as a cover (community per distinct id, O_v = 1).
Cover partitionToCover(const Graph& g, const Partition& p);

}  // namespace eagle
