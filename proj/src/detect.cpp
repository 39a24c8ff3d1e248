#include "detect.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace eagle {

namespace {

// Stamp-marked membership tester; reusable without clearing.
class MemberMark {
public:
  explicit MemberMark(std::size_t n) : stamp_(n, 0) {}

  void mark(std::span<const VertexId> members) {
    ++current_;
    for (VertexId v : members) stamp_[v] = current_;
  }

  bool contains(VertexId v) const { return stamp_[v] == current_; }

private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t current_ = 0;
};

double volumeOf(const Graph& g, std::span<const VertexId> members) {
  double volume = 0.0;
  for (VertexId v : members) volume += static_cast<double>(g.degree(v));
  return volume;
}

// Similarity kernel with one side pre-marked. `iterated` supplies the
// adjacency scans; the counts are exact integers, so the value does not
// depend on which side is marked.
double similarityMarked(const Graph& g, const MemberMark& mark,
                        std::span<const VertexId> iterated, double volIterated,
                        double volMarked) {
  const double twoM = 2.0 * static_cast<double>(g.edgeCount());
  if (twoM == 0.0) return 0.0;
  double crossEdges = 0.0;    // ordered adjacent pairs across the two sides
  double sharedDegSq = 0.0;   // excluded identical-vertex pairs: sum of k_v^2
  for (VertexId v : iterated) {
    for (VertexId w : g.neighbors(v)) {
      if (mark.contains(w)) crossEdges += 1.0;
    }
    if (mark.contains(v)) {
      const double d = static_cast<double>(g.degree(v));
      sharedDegSq += d * d;
    }
  }
  return (crossEdges - (volIterated * volMarked - sharedDegSq) / twoM) / twoM;
}

// EQ of an explicit cover state. Adjacency terms are down-weighted by
// 1/(O_v O_w); the diagonal enters through the squared degree sums, which
// is what makes the whole-graph cover telescope to exactly zero.
double eqOfState(const Graph& g,
                 const std::vector<const std::vector<VertexId>*>& communities,
                 const std::vector<std::uint32_t>& counts, MemberMark& mark) {
  const double twoM = 2.0 * static_cast<double>(g.edgeCount());
  if (twoM == 0.0) return 0.0;
  double edgeTerm = 0.0;
  double degreeTerm = 0.0;
  for (const auto* members : communities) {
    mark.mark(*members);
    double degreeSum = 0.0;
    for (VertexId v : *members) {
      const double ov = static_cast<double>(counts[v]);
      degreeSum += static_cast<double>(g.degree(v)) / ov;
      double inner = 0.0;
      for (VertexId w : g.neighbors(v)) {
        if (mark.contains(w)) inner += 1.0 / static_cast<double>(counts[w]);
      }
      edgeTerm += inner / ov;
    }
    degreeTerm += degreeSum * degreeSum;
  }
  return (edgeTerm - degreeTerm / twoM) / twoM;
}

std::vector<VertexId> unionOf(const std::vector<VertexId>& a,
                              const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Cover makeCover(std::vector<std::vector<VertexId>> memberSets,
                std::size_t vertexCount) {
  Cover cover;
  cover.membershipCount.assign(vertexCount, 0);
  cover.communities.reserve(memberSets.size());
  for (auto& members : memberSets) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) {
      raise(Errc::InvalidArgument, "empty community in cover");
    }
    for (VertexId v : members) {
      if (v >= vertexCount) {
        raise(Errc::InvalidArgument,
              "community member " + std::to_string(v) + " out of range");
      }
      ++cover.membershipCount[v];
    }
    cover.communities.push_back(
        {static_cast<std::int32_t>(cover.communities.size()), std::move(members)});
  }
  return cover;
}

Cover initialCover(const Graph& g, int minCliqueSize, std::uint64_t cliqueCap) {
  auto cliques = enumerateMaximalCliques(g, cliqueCap);
  auto seeds = filterSeeds(cliques, g, minCliqueSize);
  std::vector<std::vector<VertexId>> sets = std::move(seeds.retained);
  sets.reserve(sets.size() + seeds.subordinateVertices.size());
  for (VertexId v : seeds.subordinateVertices) sets.push_back({v});
  return makeCover(std::move(sets), g.vertexCount());
}

double similarity(const Graph& g, std::span<const VertexId> a,
                  std::span<const VertexId> b) {
  if (a.empty() || b.empty()) {
    raise(Errc::InvalidArgument, "similarity of an empty community");
  }
  for (auto side : {a, b}) {
    for (VertexId v : side) {
      if (v >= g.vertexCount()) {
        raise(Errc::InvalidArgument,
              "community member " + std::to_string(v) + " out of range");
      }
    }
  }
  const double volA = volumeOf(g, a);
  const double volB = volumeOf(g, b);
  MemberMark mark(g.vertexCount());
  if (volA <= volB) {
    mark.mark(b);
    return similarityMarked(g, mark, a, volA, volB);
  }
  mark.mark(a);
  return similarityMarked(g, mark, b, volB, volA);
}

std::vector<VertexId> Dendrogram::nodeMembers(std::int32_t node) const {
  const auto leafCount = static_cast<std::int32_t>(leaves.size());
  if (node < 0 || node >= static_cast<std::int32_t>(nodeCount())) {
    raise(Errc::InvalidArgument, "dendrogram node id out of range");
  }
  std::vector<VertexId> out;
  std::vector<std::int32_t> stack{node};
  while (!stack.empty()) {
    const std::int32_t current = stack.back();
    stack.pop_back();
    if (current < leafCount) {
      const auto& m = leaves[current].members;
      out.insert(out.end(), m.begin(), m.end());
    } else {
      const auto& merge = merges[current - leafCount];
      stack.push_back(merge.left);
      stack.push_back(merge.right);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Dendrogram buildDendrogram(const Graph& g, const Cover& seed,
                           const ProgressFn& progress) {
  Dendrogram d;
  d.leaves = seed.communities;
  const std::size_t leafCount = d.leaves.size();
  if (leafCount == 0) return d;
  if (leafCount == 1) {
    d.roots = {0};
    return d;
  }

  const std::size_t totalNodes = 2 * leafCount - 1;
  std::vector<std::vector<VertexId>> members(totalNodes);
  std::vector<double> volume(totalNodes, 0.0);
  std::vector<char> alive(totalNodes, 0);
  std::vector<std::set<std::int32_t>> nbrs(totalNodes);
  std::set<std::int32_t> active;
  for (std::size_t i = 0; i < leafCount; ++i) {
    members[i] = d.leaves[i].members;
    volume[i] = volumeOf(g, members[i]);
    alive[i] = 1;
    active.insert(static_cast<std::int32_t>(i));
  }

  // Two communities are neighbors when they share a vertex or are joined by
  // an edge. Seed neighbors come from a vertex -> communities index.
  std::vector<std::vector<std::int32_t>> byVertex(g.vertexCount());
  for (std::size_t i = 0; i < leafCount; ++i) {
    for (VertexId v : members[i]) byVertex[v].push_back(static_cast<std::int32_t>(i));
  }
  auto addNeighbor = [&](std::int32_t a, std::int32_t b) {
    if (a == b) return;
    nbrs[a].insert(b);
    nbrs[b].insert(a);
  };
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    const auto& owners = byVertex[v];
    for (std::size_t i = 0; i < owners.size(); ++i) {
      for (std::size_t j = i + 1; j < owners.size(); ++j) {
        addNeighbor(owners[i], owners[j]);
      }
    }
    for (VertexId w : g.neighbors(v)) {
      if (w <= v) continue;
      for (std::int32_t a : owners) {
        for (std::int32_t b : byVertex[w]) addNeighbor(a, b);
      }
    }
  }

  MemberMark mark(g.vertexCount());
  auto pairSimilarity = [&](std::int32_t a, std::int32_t b) {
    if (volume[a] <= volume[b]) {
      mark.mark(members[b]);
      return similarityMarked(g, mark, members[a], volume[a], volume[b]);
    }
    mark.mark(members[a]);
    return similarityMarked(g, mark, members[b], volume[b], volume[a]);
  };

  // Candidate similarities for neighboring pairs, keyed (low id, high id).
  // Map order doubles as the tie-break: scanning in key order with a strict
  // > comparison selects the lexicographically smallest maximum pair.
  std::map<std::pair<std::int32_t, std::int32_t>, double> candidates;
  for (std::size_t i = 0; i < leafCount; ++i) {
    const auto a = static_cast<std::int32_t>(i);
    for (std::int32_t b : nbrs[a]) {
      if (b > a) candidates[{a, b}] = pairSimilarity(a, b);
    }
  }

  const std::size_t totalMerges = leafCount - 1;
  for (std::uint32_t step = 1; active.size() > 1; ++step) {
    std::int32_t bestA = -1, bestB = -1;
    double bestSim = 0.0;
    if (!candidates.empty()) {
      bool first = true;
      for (const auto& [key, value] : candidates) {
        if (first || value > bestSim) {
          bestA = key.first;
          bestB = key.second;
          bestSim = value;
          first = false;
        }
      }
    } else {
      // Disconnected remainder: no two communities are neighbors. Score all
      // remaining pairs directly so the agglomeration still reaches a root.
      bool first = true;
      for (auto itA = active.begin(); itA != active.end(); ++itA) {
        for (auto itB = std::next(itA); itB != active.end(); ++itB) {
          const double s = pairSimilarity(*itA, *itB);
          if (first || s > bestSim) {
            bestA = *itA;
            bestB = *itB;
            bestSim = s;
            first = false;
          }
        }
      }
    }

    const auto merged = static_cast<std::int32_t>(leafCount + step - 1);
    members[merged] = unionOf(members[bestA], members[bestB]);
    volume[merged] = volumeOf(g, members[merged]);  // overlap: not additive
    alive[bestA] = alive[bestB] = 0;
    alive[merged] = 1;
    active.erase(bestA);
    active.erase(bestB);
    active.insert(merged);
    d.merges.push_back({step, bestA, bestB, bestSim});

    std::set<std::int32_t> mergedNbrs;
    for (std::int32_t dead : {bestA, bestB}) {
      for (std::int32_t nb : nbrs[dead]) {
        candidates.erase(std::minmax(dead, nb));
        nbrs[nb].erase(dead);
        if (alive[nb]) mergedNbrs.insert(nb);
      }
      nbrs[dead].clear();
      members[dead] = {};
    }
    nbrs[merged] = mergedNbrs;
    mark.mark(members[merged]);
    for (std::int32_t nb : mergedNbrs) {
      nbrs[nb].insert(merged);
      candidates[{nb, merged}] =
          similarityMarked(g, mark, members[nb], volume[nb], volume[merged]);
    }
    if (progress) progress(step, totalMerges);
  }

  d.roots.assign(active.begin(), active.end());
  return d;
}

double extendedModularity(const Graph& g, const Cover& cover) {
  const std::size_t n = g.vertexCount();
  if (cover.membershipCount.size() != n) {
    raise(Errc::InvalidArgument, "membership count size does not match graph");
  }
  std::vector<std::uint32_t> recount(n, 0);
  std::vector<const std::vector<VertexId>*> sets;
  sets.reserve(cover.communities.size());
  for (const auto& community : cover.communities) {
    const auto& members = community.members;
    if (members.empty()) raise(Errc::InvalidArgument, "empty community in cover");
    if (!std::is_sorted(members.begin(), members.end()) ||
        std::adjacent_find(members.begin(), members.end()) != members.end()) {
      raise(Errc::InvalidArgument, "community members must form a sorted set");
    }
    for (VertexId v : members) {
      if (v >= n) {
        raise(Errc::InvalidArgument,
              "community member " + std::to_string(v) + " out of range");
      }
      ++recount[v];
    }
    sets.push_back(&members);
  }
  if (recount != cover.membershipCount) {
    raise(Errc::InvalidArgument,
          "membership counts inconsistent with communities (stale or zero O_v)");
  }
  MemberMark mark(n);
  return eqOfState(g, sets, cover.membershipCount, mark);
}

CutResult bestCut(const Graph& g, const Dendrogram& d) {
  CutResult result;
  const std::size_t leafCount = d.leaves.size();
  result.cover.membershipCount.assign(g.vertexCount(), 0);
  if (leafCount == 0) return result;

  MemberMark mark(g.vertexCount());
  auto seedState = [&](std::map<std::int32_t, std::vector<VertexId>>& state,
                       std::vector<std::uint32_t>& counts) {
    state.clear();
    counts.assign(g.vertexCount(), 0);
    for (std::size_t i = 0; i < leafCount; ++i) {
      state[static_cast<std::int32_t>(i)] = d.leaves[i].members;
      for (VertexId v : d.leaves[i].members) ++counts[v];
    }
  };
  auto applyMerge = [&](std::map<std::int32_t, std::vector<VertexId>>& state,
                        std::vector<std::uint32_t>& counts, const MergeRecord& mr) {
    auto left = state.find(mr.left);
    auto right = state.find(mr.right);
    if (left == state.end() || right == state.end()) {
      raise(Errc::Internal, "dendrogram merge references an inactive node");
    }
    // shared vertices lose one containing community
    std::size_t i = 0, j = 0;
    const auto& a = left->second;
    const auto& b = right->second;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) ++i;
      else if (a[i] > b[j]) ++j;
      else { --counts[a[i]]; ++i; ++j; }
    }
    auto merged = unionOf(a, b);
    state.erase(left);
    state.erase(right);
    state[static_cast<std::int32_t>(leafCount + mr.step - 1)] = std::move(merged);
  };
  auto evalState = [&](const std::map<std::int32_t, std::vector<VertexId>>& state,
                       const std::vector<std::uint32_t>& counts) {
    std::vector<const std::vector<VertexId>*> sets;
    sets.reserve(state.size());
    for (const auto& [id, members] : state) sets.push_back(&members);
    return eqOfState(g, sets, counts, mark);
  };

  std::map<std::int32_t, std::vector<VertexId>> state;
  std::vector<std::uint32_t> counts;
  seedState(state, counts);
  result.curve.push_back({state.size(), evalState(state, counts)});
  for (const auto& mr : d.merges) {
    applyMerge(state, counts, mr);
    result.curve.push_back({state.size(), evalState(state, counts)});
  }

  // Ties prefer the later (coarser) cover.
  std::size_t bestIndex = 0;
  for (std::size_t i = 1; i < result.curve.size(); ++i) {
    if (result.curve[i].eq >= result.curve[bestIndex].eq) bestIndex = i;
  }
  result.eq = result.curve[bestIndex].eq;

  seedState(state, counts);
  for (std::size_t i = 0; i < bestIndex; ++i) applyMerge(state, counts, d.merges[i]);
  std::vector<std::vector<VertexId>> sets;
  sets.reserve(state.size());
  for (auto& [id, m] : state) sets.push_back(std::move(m));
  result.cover = makeCover(std::move(sets), g.vertexCount());
  return result;
}

EagleRun runEagle(const Graph& g, int minCliqueSize, std::uint64_t cliqueCap,
                  const ProgressFn& progress) {
  EagleRun run;
  run.seed = initialCover(g, minCliqueSize, cliqueCap);
  run.dendrogram = buildDendrogram(g, run.seed, progress);
  run.cut = bestCut(g, run.dendrogram);
  return run;
}

namespace {

HierarchyNode buildHierarchyNode(const Graph& sub, std::vector<VertexId> global,
                                 int depth, const DetectOptions& options,
                                 bool isRoot) {
  HierarchyNode node;
  node.members = std::move(global);
  if (node.members.size() < static_cast<std::size_t>(options.minCliqueSize) ||
      depth >= options.maxDepth) {
    return node;
  }
  EagleRun run = runEagle(sub, options.minCliqueSize, options.cliqueCap,
                          isRoot ? options.progress : ProgressFn{});
  if (run.cut.cover.size() <= 1 || run.cut.eq <= options.eqEpsilon) return node;

  node.eqOfSplit = run.cut.eq;
  for (const auto& community : run.cut.cover.communities) {
    std::vector<VertexId> childGlobal;
    childGlobal.reserve(community.members.size());
    for (VertexId local : community.members) childGlobal.push_back(node.members[local]);
    const bool mayDivide =
        childGlobal.size() >= static_cast<std::size_t>(options.minCliqueSize) &&
        depth + 1 < options.maxDepth;
    if (mayDivide) {
      Graph childSub = sub.inducedSubgraph(community.members);
      node.children.push_back(
          buildHierarchyNode(childSub, std::move(childGlobal), depth + 1, options, false));
    } else {
      HierarchyNode child;
      child.members = std::move(childGlobal);
      node.children.push_back(std::move(child));
    }
  }
  return node;
}

}  // namespace

HierarchyNode detectHierarchy(const Graph& g, const DetectOptions& options) {
  if (options.minCliqueSize < 2) {
    raise(Errc::InvalidArgument, "clique size threshold must be at least 2, got " +
                                     std::to_string(options.minCliqueSize));
  }
  if (options.maxDepth < 1) {
    raise(Errc::InvalidArgument, "max depth must be at least 1");
  }
  std::vector<VertexId> all(g.vertexCount());
  std::iota(all.begin(), all.end(), 0);
  return buildHierarchyNode(g, std::move(all), 1, options, true);
}

}  // namespace eagle
