#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

namespace eagle {

namespace {

std::vector<std::string_view> splitTokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool isSkippableLine(std::string_view line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;  // blank
}

double parseWeight(std::string_view token, std::size_t lineNo) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    raise(Errc::ParseError, "line " + std::to_string(lineNo) + ": invalid weight '" +
                                std::string(token) + "'");
  }
  if (value < 0.0) {
    raise(Errc::ParseError, "line " + std::to_string(lineNo) + ": negative weight '" +
                                std::string(token) + "'");
  }
  return value;
}

// Calls fn(lineNo, line) for every data line, skipping comments and blanks.
template <typename Fn>
void forEachDataLine(std::string_view text, Fn&& fn) {
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size()) break;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineNo;
    if (!isSkippableLine(line)) fn(lineNo, line);
    pos = end + 1;
  }
}

}  // namespace

WeightedEdgeList parseEdgeList(std::string_view text) {
  WeightedEdgeList result;
  result.directed = true;
  forEachDataLine(text, [&](std::size_t lineNo, std::string_view line) {
    auto tokens = splitTokens(line);
    if (tokens.size() < 2 || tokens.size() > 3) {
      raise(Errc::ParseError, "line " + std::to_string(lineNo) +
                                  ": expected 'u v [w]' but found " +
                                  std::to_string(tokens.size()) + " token(s)");
    }
    EdgeRecord edge;
    edge.source = std::string(tokens[0]);
    edge.target = std::string(tokens[1]);
    edge.weight = tokens.size() == 3 ? parseWeight(tokens[2], lineNo) : 1.0;
    result.edges.push_back(std::move(edge));
  });
  return result;
}

std::vector<std::vector<std::string>> parseAuthorLists(std::string_view text) {
  std::vector<std::vector<std::string>> papers;
  forEachDataLine(text, [&](std::size_t lineNo, std::string_view line) {
    auto tokens = splitTokens(line);
    std::vector<std::string> authors(tokens.begin(), tokens.end());
    std::set<std::string_view> seen;
    for (const auto& a : authors) {
      if (!seen.insert(a).second) {
        raise(Errc::ParseError, "line " + std::to_string(lineNo) +
                                    ": duplicate author '" + a + "' in one paper");
      }
    }
    papers.push_back(std::move(authors));
  });
  return papers;
}

WeightedEdgeList coauthorshipWeights(
    const std::vector<std::vector<std::string>>& papers) {
  std::map<std::pair<std::string, std::string>, double> weights;
  for (std::size_t p = 0; p < papers.size(); ++p) {
    const auto& authors = papers[p];
    if (authors.empty()) {
      raise(Errc::InvalidArgument, "paper " + std::to_string(p + 1) + ": no authors");
    }
    std::set<std::string> unique(authors.begin(), authors.end());
    if (unique.size() != authors.size()) {
      raise(Errc::InvalidArgument,
            "paper " + std::to_string(p + 1) + ": duplicate author");
    }
    if (authors.size() < 2) continue;
    const double share = 1.0 / static_cast<double>(authors.size() - 1);
    for (std::size_t i = 0; i < authors.size(); ++i) {
      for (std::size_t j = i + 1; j < authors.size(); ++j) {
        auto key = std::minmax(authors[i], authors[j]);
        weights[key] += share;
      }
    }
  }
  WeightedEdgeList result;
  result.directed = false;
  result.edges.reserve(weights.size());
  for (const auto& [pair, w] : weights) {
    result.edges.push_back({pair.first, pair.second, w});
  }
  return result;
}

Graph buildGraph(const WeightedEdgeList& input, Symmetrize mode,
                 double weightThreshold) {
  if (weightThreshold < 0.0) {
    raise(Errc::InvalidArgument, "weight threshold must be non-negative");
  }
  // Combine records per unordered pair; self-loops never survive.
  std::map<std::pair<std::string, std::string>, double> combined;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& edge : input.edges) {
    if (edge.weight < 0.0) {
      raise(Errc::InvalidArgument, "negative edge weight on " + edge.source + " -- " +
                                       edge.target);
    }
    if (edge.source.empty() || edge.target.empty()) {
      raise(Errc::InvalidArgument, "empty vertex label");
    }
    auto key = std::minmax(edge.source, edge.target);
    if (mode == Symmetrize::None && !seen.insert(key).second) {
      raise(Errc::Conflict, "symmetrize mode 'none' but pair " + key.first + " -- " +
                                key.second + " occurs more than once");
    }
    auto [it, inserted] = combined.try_emplace(key, edge.weight);
    if (!inserted) {
      it->second = mode == Symmetrize::Max ? std::max(it->second, edge.weight)
                                           : it->second + edge.weight;
    }
  }

  std::set<std::string> labelSet;
  std::vector<std::pair<std::string, std::string>> kept;
  for (const auto& [pair, w] : combined) {
    if (pair.first == pair.second) continue;   // self-loop
    if (w < weightThreshold) continue;         // strict drop, "less than"
    kept.push_back(pair);
    labelSet.insert(pair.first);
    labelSet.insert(pair.second);
  }

  std::vector<std::string> labels(labelSet.begin(), labelSet.end());
  std::map<std::string_view, VertexId> ids;
  for (VertexId v = 0; v < labels.size(); ++v) ids.emplace(labels[v], v);

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(kept.size());
  for (const auto& [a, b] : kept) edges.emplace_back(ids.at(a), ids.at(b));
  return Graph::fromEdges(std::move(labels), std::move(edges));
}

Graph Graph::fromEdges(std::vector<std::string> labels,
                       std::vector<std::pair<VertexId, VertexId>> edges) {
  const std::size_t n = labels.size();
  std::vector<std::vector<VertexId>> adj(n);
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      raise(Errc::InvalidArgument, "edge endpoint out of range");
    }
    if (u == v) {
      raise(Errc::InvalidArgument, "self-loop on vertex '" + labels[u] + "'");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::size_t m = 0;
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    m += list.size();
  }
  return Graph(std::move(labels), std::move(adj), m / 2);
}

Graph::Graph(std::vector<std::string> labels, std::vector<std::vector<VertexId>> adj,
             std::size_t edgeCount)
    : labels_(std::move(labels)), adj_(std::move(adj)), edgeCount_(edgeCount) {
  validate();
}

void Graph::validate() const {
  std::size_t degreeSum = 0;
  for (VertexId v = 0; v < adj_.size(); ++v) {
    const auto& list = adj_[v];
    degreeSum += list.size();
    if (!std::is_sorted(list.begin(), list.end())) {
      raise(Errc::Internal, "adjacency list not sorted");
    }
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      raise(Errc::Internal, "parallel edge in adjacency list");
    }
    for (VertexId w : list) {
      if (w == v) raise(Errc::Internal, "self-loop survived construction");
      if (w >= adj_.size() || !std::binary_search(adj_[w].begin(), adj_[w].end(), v)) {
        raise(Errc::Internal, "asymmetric adjacency");
      }
    }
  }
  if (degreeSum != 2 * edgeCount_) {
    raise(Errc::Internal, "degree sum does not equal 2m");
  }
}

bool Graph::hasEdge(VertexId u, VertexId v) const {
  const auto& shorter = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexId needle = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(shorter.begin(), shorter.end(), needle);
}

double Graph::averageDegree() const {
  if (adj_.empty()) return 0.0;
  return 2.0 * static_cast<double>(edgeCount_) / static_cast<double>(adj_.size());
}

double Graph::averageClustering() const {
  const std::size_t n = adj_.size();
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    const auto& nbrs = adj_[v];
    const std::size_t d = nbrs.size();
    if (d < 2) continue;
    // Edges among neighbors, via sorted-list intersections.
    std::size_t links = 0;
    for (VertexId u : nbrs) {
      const auto& other = adj_[u];
      std::size_t i = 0, j = 0;
      while (i < nbrs.size() && j < other.size()) {
        if (nbrs[i] < other[j]) ++i;
        else if (nbrs[i] > other[j]) ++j;
        else { ++links; ++i; ++j; }
      }
    }
    links /= 2;  // each neighbor edge counted from both endpoints
    sum += 2.0 * static_cast<double>(links) /
           (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  return sum / static_cast<double>(n);
}

Graph Graph::inducedSubgraph(std::span<const VertexId> vertices) const {
  std::vector<VertexId> selected(vertices.begin(), vertices.end());
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  for (VertexId v : selected) {
    if (v >= adj_.size()) {
      raise(Errc::InvalidArgument,
            "unknown vertex id " + std::to_string(v) + " in subgraph selection");
    }
  }
  std::vector<VertexId> local(adj_.size(), static_cast<VertexId>(-1));
  std::vector<std::string> labels;
  labels.reserve(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    local[selected[i]] = static_cast<VertexId>(i);
    labels.push_back(labels_[selected[i]]);
  }
  std::vector<std::vector<VertexId>> adj(selected.size());
  std::size_t degreeSum = 0;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (VertexId w : adj_[selected[i]]) {
      if (local[w] != static_cast<VertexId>(-1)) adj[i].push_back(local[w]);
    }
    degreeSum += adj[i].size();  // source lists sorted by id, order preserved
  }
  return Graph(std::move(labels), std::move(adj), degreeSum / 2);
}

}  // namespace eagle
