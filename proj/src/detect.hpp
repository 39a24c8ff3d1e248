#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "clique.hpp"

namespace eagle {

struct Community {
  std::int32_t id = 0;
  std::vector<VertexId> members;  // sorted, unique, non-empty
};

/// A set of possibly overlapping communities together with the number of
/// communities each vertex belongs to (0 = not covered).
struct Cover {
  std::vector<Community> communities;
  std::vector<std::uint32_t> membershipCount;

  std::size_t size() const { return communities.size(); }
};

/// Normalizes member sets (sorted, unique), assigns community ids by
/// position and computes membership counts. Empty member sets are rejected.
Cover makeCover(std::vector<std::vector<VertexId>> memberSets,
                std::size_t vertexCount);

struct MergeRecord {
  std::uint32_t step = 0;  // 1-based
  std::int32_t left = 0;
  std::int32_t right = 0;
  double similarity = 0.0;
};

/// Binary merge tree over the initial communities. Leaves carry node ids
/// 0..L-1; merge step t creates node id L+t-1. The member set of an
/// internal node is the union of its children and is reconstructed on
/// demand. For an agglomeration that runs to completion there is a single
/// root covering every vertex; a greedy baseline stopped early on a
/// disconnected graph keeps one root per remaining component.
struct Dendrogram {
  std::vector<Community> leaves;
  std::vector<MergeRecord> merges;
  std::vector<std::int32_t> roots;

  std::size_t nodeCount() const { return leaves.size() + merges.size(); }
  std::vector<VertexId> nodeMembers(std::int32_t node) const;
};

struct CurvePoint {
  std::size_t communities = 0;
  double eq = 0.0;
};

struct CutResult {
  Cover cover;
  double eq = 0.0;
  std::vector<CurvePoint> curve;  // one point per cover, seed state first
};

struct HierarchyNode {
  std::vector<VertexId> members;
  std::optional<double> eqOfSplit;  // EQ of the node's best sub-cover
  std::vector<HierarchyNode> children;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

struct DetectOptions {
  int minCliqueSize = 4;  // threshold k; typical range 3..6
  int maxDepth = 3;
  std::uint64_t cliqueCap = kDefaultCliqueCap;
  double eqEpsilon = 1e-9;  // near-zero EQ guard for recursion termination
  ProgressFn progress;
};

/// Initial communities: maximal cliques of size >= minCliqueSize plus one
/// singleton per vertex covered by none of them.
Cover initialCover(const Graph& g, int minCliqueSize,
                   std::uint64_t cliqueCap = kDefaultCliqueCap);

/// Similarity M between two communities: the adjacency-minus-null-model
/// kernel summed over ordered member pairs (v, w), v != w, scaled by 1/2m.
/// Shared vertices contribute on both sides; only identical-vertex pairs
/// are excluded. Returns 0 on an edgeless graph.
double similarity(const Graph& g, std::span<const VertexId> a,
                  std::span<const VertexId> b);

/// Agglomerates the seed cover into a dendrogram: repeatedly merges the
/// maximum-similarity pair among neighboring communities (sharing a vertex
/// or connected by an edge), falling back to all remaining pairs when no
/// neighbors are left, until a single community remains.
Dendrogram buildDendrogram(const Graph& g, const Cover& seed,
                           const ProgressFn& progress = {});

/// Extended modularity EQ of a cover: modularity generalized to overlaps by
/// down-weighting each (v, w) term, diagonal included, by 1/(O_v * O_w).
/// Equals plain modularity when every O_v = 1 and is exactly 0 for the
/// whole-vertex-set cover. Raises if the stored membership counts are
/// inconsistent with the communities.
double extendedModularity(const Graph& g, const Cover& cover);

/// Evaluates EQ for every cover along the merge sequence and returns the
/// maximizing cover, its EQ and the whole curve. Ties prefer the cover
/// with fewer communities.
CutResult bestCut(const Graph& g, const Dendrogram& d);

/// One full pipeline pass: seed cover, dendrogram, best cut.
struct EagleRun {
  Cover seed;
  Dendrogram dendrogram;
  CutResult cut;
};

EagleRun runEagle(const Graph& g, int minCliqueSize,
                  std::uint64_t cliqueCap = kDefaultCliqueCap,
                  const ProgressFn& progress = {});

/// Full recursive detection: pipeline on the graph, then on each community
/// of the best cover, until a community yields a trivial cover, EQ at or
/// below the epsilon guard, size below the clique threshold, or the depth
/// limit. Node members are ids of the original graph.
HierarchyNode detectHierarchy(const Graph& g, const DetectOptions& options);

}  // namespace eagle
