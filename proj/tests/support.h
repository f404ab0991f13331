#pragma once

// Small graph families and independent reference computations for tests.
// The reference routines here deliberately share no code with the library
// beyond the Graph container.

#include <cstdint>
#include <limits>
#include <vector>

#include "domset/graph.h"
#include "domset/rng.h"

namespace testing {

using domset::Edge;
using domset::Graph;
using domset::Vertex;

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, e);
}

/// K_{1,leaves} with center 0.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph::from_edges(n, e);
}

inline Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}); }

/// G(n, p) with every pair kept independently with probability p.
inline Graph random_graph(std::size_t n, double p, domset::Rng& rng) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) e.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, e);
}

inline Graph with_weights(Graph g, std::vector<double> w) {
  g.set_weights(std::move(w));
  return g;
}

/// Dominance check written against raw adjacency.
inline bool dominates(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bool ok = in[v];
    for (Vertex u : g.neighbors(v)) ok = ok || in[u];
    if (!ok) return false;
  }
  return true;
}

/// Minimum cardinality / weight over all 2^n subsets (n <= 20).
struct Exhaustive {
  std::size_t gamma = 0;
  double min_weight = 0.0;
};

inline Exhaustive exhaustive(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (Vertex u : g.neighbors(v)) closed[v] |= 1u << u;
  }
  const std::uint32_t all = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  Exhaustive best{n, std::numeric_limits<double>::infinity()};
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    std::uint32_t cover = 0;
    double w = 0.0;
    std::size_t size = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) {
        cover |= closed[v];
        w += g.weight(v);
        ++size;
      }
    }
    if (cover != all) continue;
    if (size < best.gamma) best.gamma = size;
    if (w < best.min_weight) best.min_weight = w;
  }
  if (n == 0) best.min_weight = 0.0;
  return best;
}

inline double harmonic(std::size_t k) {
  double h = 0.0;
  for (std::size_t i = 1; i <= k; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

/// A random dominating set: a random subset patched until dominating.
inline std::vector<Vertex> random_dominating_set(const Graph& g, double p, domset::Rng& rng) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) in[v] = rng.uniform() < p;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bool ok = in[v];
    for (Vertex u : g.neighbors(v)) ok = ok || in[u];
    if (!ok) in[v] = 1;
  }
  std::vector<Vertex> s;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) s.push_back(v);
  }
  return s;
}

}  // namespace testing
