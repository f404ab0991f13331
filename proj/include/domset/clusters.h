#pragma once

// Dominance drawing: every vertex is grouped around one adjacent member.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "domset/graph.h"

namespace domset {

struct ClusterAssignment {
  std::vector<Vertex> heads;  // members, ascending
  std::vector<Vertex> head;   // head[v] for every vertex; head[s] == s for members
  std::vector<std::vector<Vertex>> clusters;  // parallel to `heads`, ascending ids
};

/// Members head their own cluster. A non-member joins the adjacent member of
/// highest degree, lowest id on ties. Throws InvalidArgument when `members`
/// is not dominating.
ClusterAssignment assign_clusters(const Graph& g, std::span<const Vertex> members);

/// DOT graph: one subgraph cluster per head, heads filled, edges once.
void write_cluster_dot(std::ostream& out, const Graph& g, const ClusterAssignment& clusters);

}  // namespace domset
