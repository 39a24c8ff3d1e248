#include "baselines.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace eagle {

double modularityQ(const Graph& g, const Partition& p) {
  const std::size_t n = g.vertexCount();
  if (p.assignment.size() != n) {
    raise(Errc::InvalidArgument, "partition does not assign every vertex");
  }
  if (g.edgeCount() == 0) return 0.0;
  std::map<std::int32_t, std::pair<double, double>> perCommunity;  // (2*internal, volume)
  for (VertexId v = 0; v < n; ++v) {
    const std::int32_t c = p.assignment[v];
    if (c < 0) {
      raise(Errc::InvalidArgument,
            "vertex '" + g.label(v) + "' has no community assignment");
    }
    auto& [internal, volume] = perCommunity[c];
    volume += static_cast<double>(g.degree(v));
    for (VertexId w : g.neighbors(v)) {
      if (p.assignment[w] == c) internal += 1.0;
    }
  }
  const double twoM = 2.0 * static_cast<double>(g.edgeCount());
  double q = 0.0;
  for (const auto& [id, stats] : perCommunity) {
    const auto& [internal, volume] = stats;
    q += internal / twoM - (volume / twoM) * (volume / twoM);
  }
  return q;
}

CnmResult cnmGreedy(const Graph& g) {
  CnmResult result;
  const std::size_t n = g.vertexCount();
  result.partition.assignment.assign(n, 0);
  result.dendrogram.leaves.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    result.dendrogram.leaves.push_back({static_cast<std::int32_t>(v), {v}});
  }
  if (n == 0) return result;
  if (g.edgeCount() == 0) {
    // nothing to merge; every vertex stays its own community
    for (VertexId v = 0; v < n; ++v) {
      result.dendrogram.roots.push_back(static_cast<std::int32_t>(v));
      result.partition.assignment[v] = static_cast<std::int32_t>(v);
    }
    result.q = 0.0;
    return result;
  }

  const double m = static_cast<double>(g.edgeCount());
  const double twoM = 2.0 * m;

  std::vector<double> volume(2 * n - 1, 0.0);
  std::vector<char> alive(2 * n - 1, 0);
  std::set<std::int32_t> active;
  // connections[(i,j)] = number of edges between communities i and j
  std::map<std::pair<std::int32_t, std::int32_t>, double> connections;
  std::vector<std::map<std::int32_t, double>> links(2 * n - 1);

  double q = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    volume[v] = static_cast<double>(g.degree(v));
    alive[v] = 1;
    active.insert(static_cast<std::int32_t>(v));
    q -= (volume[v] / twoM) * (volume[v] / twoM);
    for (VertexId w : g.neighbors(v)) {
      if (w > v) {
        connections[{static_cast<std::int32_t>(v), static_cast<std::int32_t>(w)}] = 1.0;
        links[v][static_cast<std::int32_t>(w)] = 1.0;
        links[w][static_cast<std::int32_t>(v)] = 1.0;
      }
    }
  }

  // qAfter[t] = Q after t merges; state 0 is the all-singletons partition.
  std::vector<double> qAfter{q};

  std::uint32_t step = 1;
  while (!connections.empty()) {
    std::int32_t bestA = -1, bestB = -1;
    double bestGain = 0.0;
    bool first = true;
    for (const auto& [key, between] : connections) {
      const double gain =
          between / m - volume[key.first] * volume[key.second] / (2.0 * m * m);
      if (first || gain > bestGain) {
        bestA = key.first;
        bestB = key.second;
        bestGain = gain;
        first = false;
      }
    }

    const auto merged = static_cast<std::int32_t>(n + step - 1);
    volume[merged] = volume[bestA] + volume[bestB];
    alive[bestA] = alive[bestB] = 0;
    alive[merged] = 1;
    active.erase(bestA);
    active.erase(bestB);
    active.insert(merged);
    result.dendrogram.merges.push_back({step, bestA, bestB, bestGain});
    q += bestGain;
    qAfter.push_back(q);

    // splice the two link maps into the merged node
    std::map<std::int32_t, double> mergedLinks;
    for (std::int32_t dead : {bestA, bestB}) {
      for (const auto& [nb, count] : links[dead]) {
        connections.erase(std::minmax(dead, nb));
        links[nb].erase(dead);
        if (alive[nb]) mergedLinks[nb] += count;
      }
      links[dead].clear();
    }
    for (const auto& [nb, count] : mergedLinks) {
      links[nb][merged] = count;
      connections[{nb, merged}] = count;
    }
    links[merged] = std::move(mergedLinks);
    ++step;
  }
  result.dendrogram.roots.assign(active.begin(), active.end());

  // Pick the maximum-Q state; ties prefer the coarser (later) state.
  std::size_t bestState = 0;
  for (std::size_t t = 1; t < qAfter.size(); ++t) {
    if (qAfter[t] >= qAfter[bestState]) bestState = t;
  }

  // Rebuild the partition at that state by replaying the merges.
  std::vector<std::int32_t> group(n);
  for (VertexId v = 0; v < n; ++v) group[v] = static_cast<std::int32_t>(v);
  std::vector<std::vector<VertexId>> pool(2 * n - 1);
  for (VertexId v = 0; v < n; ++v) pool[v] = {v};
  for (std::size_t t = 0; t < bestState; ++t) {
    const auto& mr = result.dendrogram.merges[t];
    const auto merged = static_cast<std::int32_t>(n + mr.step - 1);
    pool[merged] = std::move(pool[mr.left]);
    auto& right = pool[mr.right];
    pool[merged].insert(pool[merged].end(), right.begin(), right.end());
    right.clear();
  }
  std::vector<std::vector<VertexId>> groups;
  for (auto& bucket : pool) {
    if (!bucket.empty()) {
      std::sort(bucket.begin(), bucket.end());
      groups.push_back(std::move(bucket));
    }
  }
  std::sort(groups.begin(), groups.end());
  for (std::size_t c = 0; c < groups.size(); ++c) {
    for (VertexId v : groups[c]) {
      result.partition.assignment[v] = static_cast<std::int32_t>(c);
    }
  }
  result.q = modularityQ(g, result.partition);
  return result;
}

Cover cpmCover(const Graph& g, int k, std::uint64_t cliqueCap) {
  if (k < 3) {
    raise(Errc::InvalidArgument,
          "clique percolation requires k >= 3, got " + std::to_string(k));
  }
  auto cliques = enumerateMaximalCliques(g, cliqueCap);
  std::erase_if(cliques,
                [&](const Clique& c) { return c.size() < static_cast<std::size_t>(k); });

  // Union-find over cliques; candidates share at least one vertex.
  std::vector<std::size_t> parent(cliques.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<std::vector<std::size_t>> byVertex(g.vertexCount());
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    for (VertexId v : cliques[i]) byVertex[v].push_back(i);
  }
  std::set<std::pair<std::size_t, std::size_t>> checked;
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    const auto& owners = byVertex[v];
    for (std::size_t i = 0; i < owners.size(); ++i) {
      for (std::size_t j = i + 1; j < owners.size(); ++j) {
        auto pair = std::minmax(owners[i], owners[j]);
        if (!checked.insert(pair).second) continue;
        const auto& a = cliques[pair.first];
        const auto& b = cliques[pair.second];
        std::size_t shared = 0, x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
          if (a[x] < b[y]) ++x;
          else if (a[x] > b[y]) ++y;
          else { ++shared; ++x; ++y; }
        }
        if (shared >= static_cast<std::size_t>(k - 1)) {
          parent[find(pair.first)] = find(pair.second);
        }
      }
    }
  }

  std::map<std::size_t, std::vector<VertexId>> components;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    auto& bucket = components[find(i)];
    bucket.insert(bucket.end(), cliques[i].begin(), cliques[i].end());
  }
  std::vector<std::vector<VertexId>> sets;
  sets.reserve(components.size());
  for (auto& [root, members] : components) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    sets.push_back(std::move(members));
  }
  std::sort(sets.begin(), sets.end());
  return makeCover(std::move(sets), g.vertexCount());
}

Cover partitionToCover(const Graph& g, const Partition& p) {
  if (p.assignment.size() != g.vertexCount()) {
    raise(Errc::InvalidArgument, "partition does not assign every vertex");
  }
  std::map<std::int32_t, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    if (p.assignment[v] < 0) {
      raise(Errc::InvalidArgument,
            "vertex '" + g.label(v) + "' has no community assignment");
    }
    groups[p.assignment[v]].push_back(v);
  }
  std::vector<std::vector<VertexId>> sets;
  sets.reserve(groups.size());
  for (auto& [id, members] : groups) sets.push_back(std::move(members));
  return makeCover(std::move(sets), g.vertexCount());
}

}  // namespace eagle
