#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace eagle {

/// A clique as a sorted vertex-id set.
using Clique = std::vector<VertexId>;

/// Safety cap on the number of enumerated maximal cliques; enumeration on
/// pathological dense inputs aborts with LimitExceeded once the cap is hit.
inline constexpr std::uint64_t kDefaultCliqueCap = 10'000'000;

/// Enumerates all maximal cliques (Bron-Kerbosch with pivoting). Each clique
/// is sorted and the list is sorted lexicographically, so the output is
/// independent of branch exploration order. Isolated vertices yield size-1
/// cliques; an empty graph yields an empty list.
std::vector<Clique> enumerateMaximalCliques(const Graph& g,
                                            std::uint64_t cap = kDefaultCliqueCap);

/// True iff every vertex of `clique` also belongs to some strictly larger
/// clique in `all`. `all` must be the complete maximal-clique list of one
/// graph and must contain `clique`.
bool isSubordinate(const Clique& clique, const std::vector<Clique>& all);

/// Subordinate flag for every clique in `all` in one pass.
std::vector<bool> subordinateFlags(const Graph& g, const std::vector<Clique>& all);

/// Initial community seeds: maximal cliques of size >= minCliqueSize plus
/// the vertices covered by none of them.
struct SeedSet {
  std::vector<Clique> retained;
  std::vector<VertexId> subordinateVertices;
};

/// Applies the size filter to the complete maximal-clique list of `g`.
/// minCliqueSize < 2 is a parameter error.
SeedSet filterSeeds(const std::vector<Clique>& all, const Graph& g,
                    int minCliqueSize);

}  // namespace eagle
