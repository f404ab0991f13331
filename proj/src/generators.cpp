#include "domset/generators.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "domset/errors.h"
#include "domset/rng.h"

namespace domset {

void UnitDiskParams::validate() const {
  if (n < 2) throw InvalidArgument("unit disk: n must be >= 2");
  if (!(grid_side > 0.0)) throw InvalidArgument("unit disk: grid side must be positive");
  if (!(range > 0.0)) throw InvalidArgument("unit disk: range must be positive");
}

void BaParams::validate() const {
  if (edges_per_vertex < 1) throw InvalidArgument("BA: edges per vertex must be >= 1");
  if (edges_per_vertex > n) throw InvalidArgument("BA: edges per vertex must not exceed n");
}

void WeightedRandomParams::validate() const {
  if (n < 1) throw InvalidArgument("weighted random: n must be >= 1");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m > max_edges) throw InvalidArgument("weighted random: m exceeds n(n-1)/2");
  if (m + 1 < n) throw InvalidArgument("weighted random: m < n-1 cannot be connected");
  if (scheme == WeightScheme::kUniform && (lo < 1.0 || lo > hi)) {
    throw InvalidArgument("weighted random: need 1 <= lo <= hi");
  }
}

namespace {

bool within(const Point& a, const Point& b, double range_sq) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy <= range_sq;
}

}  // namespace

std::vector<Edge> unit_disk_edges_serial(std::span<const Point> points, double range) {
  const double range_sq = range * range;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (within(points[i], points[j], range_sq)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return edges;
}

std::vector<Edge> unit_disk_edges(std::span<const Point> points, double range) {
  const std::size_t n = points.size();
  if (n == 0) return {};
  const double range_sq = range * range;

  double min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
  for (const auto& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  // Cells are at least `range` wide so neighbors lie in the 3x3 block.
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const auto max_cells =
      static_cast<std::size_t>(std::max(1.0, std::ceil(2.0 * std::sqrt(static_cast<double>(n)))));
  const double cell = std::max(range, extent / static_cast<double>(max_cells));
  const auto dim = static_cast<std::size_t>(std::floor(extent / cell)) + 1;
  auto cell_of = [&](double x, double lo) {
    return std::min(dim - 1, static_cast<std::size_t>((x - lo) / cell));
  };

  // Counting sort of point ids by cell; ids stay ascending inside a cell.
  std::vector<std::size_t> cell_start(dim * dim + 1, 0);
  std::vector<std::size_t> point_cell(n);
  for (std::size_t i = 0; i < n; ++i) {
    point_cell[i] = cell_of(points[i].y, min_y) * dim + cell_of(points[i].x, min_x);
    ++cell_start[point_cell[i] + 1];
  }
  for (std::size_t c = 0; c < dim * dim; ++c) cell_start[c + 1] += cell_start[c];
  std::vector<Vertex> by_cell(n);
  {
    std::vector<std::size_t> fill(cell_start.begin(), cell_start.end() - 1);
    for (std::size_t i = 0; i < n; ++i) by_cell[fill[point_cell[i]]++] = static_cast<Vertex>(i);
  }

  // Lower neighbors (j < i) per point, in scan order.
  std::vector<std::vector<Vertex>> lower(n);
  const auto signed_n = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t si = 0; si < signed_n; ++si) {
    const auto i = static_cast<std::size_t>(si);
    const std::size_t cy = point_cell[i] / dim;
    const std::size_t cx = point_cell[i] % dim;
    auto& out = lower[i];
    for (std::size_t y = cy == 0 ? 0 : cy - 1; y <= std::min(dim - 1, cy + 1); ++y) {
      for (std::size_t x = cx == 0 ? 0 : cx - 1; x <= std::min(dim - 1, cx + 1); ++x) {
        const std::size_t c = y * dim + x;
        for (std::size_t k = cell_start[c]; k < cell_start[c + 1]; ++k) {
          const Vertex j = by_cell[k];
          if (j < i && within(points[i], points[j], range_sq)) out.push_back(j);
        }
      }
    }
  }

  // Scatter (j, i) in ascending i: each j's run comes out sorted, no sort needed.
  std::vector<std::size_t> slot(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex j : lower[i]) ++slot[j + 1];
  }
  for (std::size_t v = 0; v < n; ++v) slot[v + 1] += slot[v];
  std::vector<Edge> edges(slot[n]);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex j : lower[i]) edges[slot[j]++] = Edge(j, static_cast<Vertex>(i));
  }
  return edges;
}

Graph unit_disk_graph(std::span<const Point> points, double range) {
  const auto edges = unit_disk_edges(points, range);
  return Graph::from_edges(points.size(), edges);
}

UnitDiskGraph gen_unit_disk(const UnitDiskParams& params) {
  params.validate();
  Rng rng(params.seed);
  UnitDiskGraph out;
  out.points.resize(params.n);
  for (auto& p : out.points) {
    p.x = rng.uniform(0.0, params.grid_side);
    p.y = rng.uniform(0.0, params.grid_side);
  }
  out.graph = unit_disk_graph(out.points, params.range);
  return out;
}

Graph gen_ba(const BaParams& params) {
  params.validate();
  const std::size_t n = params.n;
  const std::size_t w = params.edges_per_vertex;
  Rng rng(params.seed);

  std::vector<Edge> edges;
  edges.reserve((w - 1) + (n - w) * w);
  // Vertex v appears deg(v) times; a uniform draw is a degree-proportional draw.
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * edges.capacity());
  for (std::size_t i = 0; i + 1 < w; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    endpoints.push_back(static_cast<Vertex>(i));
    endpoints.push_back(static_cast<Vertex>(i + 1));
  }

  std::vector<Vertex> targets;
  std::vector<char> chosen(n, 0);
  for (std::size_t v = w; v < n; ++v) {
    targets.clear();
    while (targets.size() < w) {
      // Only reachable for w == 1 on the first arrival: the seed vertex has no edges.
      const Vertex t = endpoints.empty() ? static_cast<Vertex>(rng.below(v))
                                         : endpoints[rng.below(endpoints.size())];
      if (chosen[t]) continue;
      chosen[t] = 1;
      targets.push_back(t);
    }
    for (Vertex t : targets) {
      chosen[t] = 0;
      edges.emplace_back(t, static_cast<Vertex>(v));
      endpoints.push_back(t);
      endpoints.push_back(static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_weighted_random(const WeightedRandomParams& params) {
  params.validate();
  const std::size_t n = params.n;
  Rng rng(params.seed);

  auto key = [n](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * n + v;
  };

  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  rng.shuffle(std::span<Vertex>(order));

  std::vector<Edge> edges;
  edges.reserve(params.m);
  std::unordered_set<std::uint64_t> present;
  present.reserve(params.m * 2);
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex u = order[i];
    const Vertex v = order[rng.below(i)];
    edges.emplace_back(std::min(u, v), std::max(u, v));
    present.insert(key(u, v));
  }

  const std::size_t extra = params.m - edges.size();
  const std::size_t max_edges = n * (n - 1) / 2;
  if (extra > 0 && 2 * params.m > max_edges) {
    // Dense: enumerate the complement and take a random prefix.
    std::vector<Edge> missing;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!present.count(key(u, v))) missing.emplace_back(u, v);
      }
    }
    rng.shuffle(std::span<Edge>(missing));
    edges.insert(edges.end(), missing.begin(), missing.begin() + static_cast<std::ptrdiff_t>(extra));
  } else {
    while (edges.size() < params.m) {
      const auto u = static_cast<Vertex>(rng.below(n));
      const auto v = static_cast<Vertex>(rng.below(n));
      if (u == v || !present.insert(key(u, v)).second) continue;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }

  Graph g = Graph::from_edges(n, edges);
  std::vector<double> weights(n);
  for (Vertex v = 0; v < n; ++v) {
    if (params.scheme == WeightScheme::kUniform) {
      const auto lo = static_cast<std::uint64_t>(std::ceil(params.lo));
      const auto hi = static_cast<std::uint64_t>(std::floor(params.hi));
      weights[v] = static_cast<double>(rng.between(lo, std::max(lo, hi)));
    } else {
      const std::uint64_t d = std::max<std::uint64_t>(1, g.degree(v));
      weights[v] = static_cast<double>(rng.between(1, d * d));
    }
  }
  g.set_weights(std::move(weights));
  return g;
}

}  // namespace domset
