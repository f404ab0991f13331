#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "domset/graph.h"
#include "domset/io.h"

namespace domset {

struct UnitDiskParams {
  std::size_t n = 0;
  double grid_side = 1000.0;  // points are placed in [0, grid_side]^2
  double range = 150.0;       // edge iff Euclidean distance <= range
  std::uint64_t seed = 0;

  void validate() const;
};

struct BaParams {
  std::size_t n = 0;
  std::size_t edges_per_vertex = 2;  // also the length of the initial path
  std::uint64_t seed = 0;

  void validate() const;
};

enum class WeightScheme {
  kUniform,        // integer weights uniform in [lo, hi]
  kDegreeSquared,  // integer weight uniform in [1, deg(v)^2]
};

struct WeightedRandomParams {
  std::size_t n = 0;
  std::size_t m = 0;
  WeightScheme scheme = WeightScheme::kUniform;
  double lo = 20.0;
  double hi = 70.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct UnitDiskGraph {
  Graph graph;
  std::vector<Point> points;
};

/// i.i.d. uniform points in the square and the distance-threshold graph.
UnitDiskGraph gen_unit_disk(const UnitDiskParams& params);

/// Unit disk graph on caller-supplied points.
Graph unit_disk_graph(std::span<const Point> points, double range);

/// Threshold edges, cell-bucketed and OpenMP-parallel. Output is sorted and
/// identical to unit_disk_edges_serial for any thread count.
std::vector<Edge> unit_disk_edges(std::span<const Point> points, double range);
/// All-pairs reference kernel.
std::vector<Edge> unit_disk_edges_serial(std::span<const Point> points, double range);

/// Preferential attachment growth from a path on `edges_per_vertex` vertices.
/// Every arriving vertex attaches to that many distinct existing vertices,
/// drawn proportionally to degree.
Graph gen_ba(const BaParams& params);

/// Connected random graph with exactly n vertices and m edges: a random
/// spanning tree plus uniformly chosen extra edges, weighted per scheme.
Graph gen_weighted_random(const WeightedRandomParams& params);

}  // namespace domset
