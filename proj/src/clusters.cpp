#include "domset/clusters.h"

#include <algorithm>
#include <ostream>

#include "domset/errors.h"
#include "domset/solution.h"

namespace domset {

ClusterAssignment assign_clusters(const Graph& g, std::span<const Vertex> members) {
  if (!is_dominating_set(g, members)) throw InvalidArgument("clusters: solution is not dominating");
  const std::size_t n = g.num_vertices();
  constexpr Vertex kNone = UINT32_MAX;
  std::vector<char> in_set(n, 0);
  for (Vertex v : members) in_set[v] = 1;

  ClusterAssignment out;
  out.head.assign(n, kNone);
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v]) {
      out.head[v] = v;
      out.heads.push_back(v);
      continue;
    }
    Vertex best = kNone;
    for (Vertex u : g.neighbors(v)) {
      if (!in_set[u]) continue;
      if (best == kNone || g.degree(u) > g.degree(best)) best = u;  // neighbors ascend, so ties keep the lower id
    }
    out.head[v] = best;
  }

  std::vector<std::size_t> slot(n, 0);
  for (std::size_t i = 0; i < out.heads.size(); ++i) slot[out.heads[i]] = i;
  out.clusters.resize(out.heads.size());
  for (Vertex v = 0; v < n; ++v) out.clusters[slot[out.head[v]]].push_back(v);
  return out;
}

void write_cluster_dot(std::ostream& out, const Graph& g, const ClusterAssignment& clusters) {
  out << "graph dominance {\n";
  out << "  node [shape=circle, style=filled, fillcolor=white];\n";
  for (std::size_t i = 0; i < clusters.heads.size(); ++i) {
    const Vertex h = clusters.heads[i];
    out << "  subgraph cluster_" << g.label(h) << " {\n";
    out << "    label=\"" << g.label(h) << "\";\n";
    for (Vertex v : clusters.clusters[i]) {
      out << "    " << g.label(v);
      if (v == h) out << " [fillcolor=\"#d62728\", fontcolor=white]";
      out << ";\n";
    }
    out << "  }\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << g.label(u) << " -- " << g.label(v);
    if (clusters.head[u] != clusters.head[v]) out << " [color=gray]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace domset
