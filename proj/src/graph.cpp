#include "domset/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "domset/errors.h"

namespace domset {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, BuildReport* report) {
  BuildReport local;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw RangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") outside vertex range [0, " + std::to_string(n) + ")");
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);

  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }

  // Sort and deduplicate every list, then compact in place.
  std::size_t write = 0;
  std::size_t removed = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto begin = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    const auto end = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(begin, end);
    const auto unique_end = std::unique(begin, end);
    const std::size_t kept = static_cast<std::size_t>(unique_end - begin);
    removed += static_cast<std::size_t>(end - unique_end);
    std::copy(begin, unique_end, g.targets_.begin() + static_cast<std::ptrdiff_t>(write));
    g.offsets_[v] = write;
    write += kept;
    g.max_degree_ = std::max(g.max_degree_, kept);
  }
  g.offsets_[n] = write;
  g.targets_.resize(write);
  g.targets_.shrink_to_fit();
  // Each duplicate undirected edge was removed from both endpoint lists.
  local.duplicate_edges = removed / 2;

  if (report != nullptr) *report = local;
  return g;
}

void Graph::set_weights(std::vector<double> weights) {
  if (weights.size() != num_vertices()) {
    throw InvalidArgument("expected " + std::to_string(num_vertices()) + " weights, got " +
                          std::to_string(weights.size()));
  }
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (!(weights[v] > 0.0) || !std::isfinite(weights[v])) {
      throw InvalidArgument("weight of vertex " + std::to_string(v) + " must be positive");
    }
  }
  weights_ = std::move(weights);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

double Graph::total_weight() const {
  if (weights_.empty()) return static_cast<double>(num_vertices());
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace domset
