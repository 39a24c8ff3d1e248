#include "clique.hpp"

#include <algorithm>

namespace eagle {

namespace {

// Bron-Kerbosch state over sorted vertex vectors. R is the growing clique,
// P the candidates adjacent to all of R, X the already-explored vertices
// adjacent to all of R. Reports R when P and X are both empty.
class BronKerbosch {
public:
  BronKerbosch(const Graph& g, std::uint64_t cap) : g_(g), cap_(cap) {}

  std::vector<Clique> run() {
    std::vector<VertexId> all(g_.vertexCount());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    Clique r;
    expand(r, std::move(all), {});
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

private:
  void expand(Clique& r, std::vector<VertexId> p, std::vector<VertexId> x) {
    if (p.empty() && x.empty()) {
      if (out_.size() >= cap_) {
        raise(Errc::LimitExceeded,
              "maximal clique count exceeds cap (" + std::to_string(cap_) +
                  "); raise the clique cap to enumerate this graph");
      }
      Clique found = r;
      std::sort(found.begin(), found.end());
      out_.push_back(std::move(found));
      return;
    }
    // Pivot on the vertex of P|X covering the most candidates; only
    // candidates outside its neighborhood spawn branches.
    VertexId pivot = choosePivot(p, x);
    auto pivotNbrs = g_.neighbors(pivot);
    std::vector<VertexId> branch;
    std::set_difference(p.begin(), p.end(), pivotNbrs.begin(), pivotNbrs.end(),
                        std::back_inserter(branch));
    for (VertexId v : branch) {
      auto nbrs = g_.neighbors(v);
      std::vector<VertexId> nextP, nextX;
      std::set_intersection(p.begin(), p.end(), nbrs.begin(), nbrs.end(),
                            std::back_inserter(nextP));
      std::set_intersection(x.begin(), x.end(), nbrs.begin(), nbrs.end(),
                            std::back_inserter(nextX));
      r.push_back(v);
      expand(r, std::move(nextP), std::move(nextX));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  VertexId choosePivot(const std::vector<VertexId>& p,
                       const std::vector<VertexId>& x) const {
    VertexId best = p.empty() ? x.front() : p.front();
    std::size_t bestCount = 0;
    bool first = true;
    for (const auto* side : {&p, &x}) {
      for (VertexId u : *side) {
        auto nbrs = g_.neighbors(u);
        std::size_t count = 0;
        std::size_t i = 0, j = 0;
        while (i < p.size() && j < nbrs.size()) {
          if (p[i] < nbrs[j]) ++i;
          else if (p[i] > nbrs[j]) ++j;
          else { ++count; ++i; ++j; }
        }
        if (first || count > bestCount) {
          best = u;
          bestCount = count;
          first = false;
        }
      }
    }
    return best;
  }

  const Graph& g_;
  std::uint64_t cap_;
  std::vector<Clique> out_;
};

}  // namespace

std::vector<Clique> enumerateMaximalCliques(const Graph& g, std::uint64_t cap) {
  if (g.vertexCount() == 0) return {};
  return BronKerbosch(g, cap).run();
}

std::vector<bool> subordinateFlags(const Graph& g, const std::vector<Clique>& all) {
  // largest[v] = size of the largest maximal clique containing v; a clique is
  // subordinate iff every member has a strictly larger containing clique.
  std::vector<std::size_t> largest(g.vertexCount(), 0);
  for (const auto& c : all) {
    for (VertexId v : c) largest[v] = std::max(largest[v], c.size());
  }
  std::vector<bool> flags(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    flags[i] = std::all_of(all[i].begin(), all[i].end(),
                           [&](VertexId v) { return largest[v] > all[i].size(); });
  }
  return flags;
}

bool isSubordinate(const Clique& clique, const std::vector<Clique>& all) {
  if (std::find(all.begin(), all.end(), clique) == all.end()) {
    raise(Errc::InvalidArgument,
          "clique is not a member of the supplied maximal-clique list");
  }
  std::size_t maxId = 0;
  for (const auto& c : all) {
    for (VertexId v : c) maxId = std::max<std::size_t>(maxId, v);
  }
  std::vector<std::size_t> largest(maxId + 1, 0);
  for (const auto& c : all) {
    for (VertexId v : c) largest[v] = std::max(largest[v], c.size());
  }
  return std::all_of(clique.begin(), clique.end(),
                     [&](VertexId v) { return largest[v] > clique.size(); });
}

SeedSet filterSeeds(const std::vector<Clique>& all, const Graph& g,
                    int minCliqueSize) {
  if (minCliqueSize < 2) {
    raise(Errc::InvalidArgument, "clique size threshold must be at least 2, got " +
                                     std::to_string(minCliqueSize));
  }
  SeedSet seeds;
  std::vector<bool> covered(g.vertexCount(), false);
  for (const auto& c : all) {
    if (c.size() >= static_cast<std::size_t>(minCliqueSize)) {
      for (VertexId v : c) covered[v] = true;
      seeds.retained.push_back(c);
    }
  }
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    if (!covered[v]) seeds.subordinateVertices.push_back(v);
  }
  return seeds;
}

}  // namespace eagle
