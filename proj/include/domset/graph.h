#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace domset {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Counts of input defects that were repaired while building a graph.
struct BuildReport {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

/// Undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted by id, symmetric, and free of self-loops and
/// duplicates. Vertex weights are optional; an unweighted graph reports unit
/// weights. The graph is immutable once built and may be shared freely
/// between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list. Self-loops and duplicates (in either
  /// orientation) are dropped and counted in `report`. Throws RangeError when
  /// an endpoint is >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          BuildReport* report = nullptr);

  /// Attaches vertex weights. Throws InvalidArgument unless there is exactly
  /// one strictly positive finite weight per vertex.
  void set_weights(std::vector<double> weights);
  void clear_weights() { weights_.clear(); }

  /// Offset between dense ids and the ids used in the source file
  /// (label = id + index_base).
  void set_index_base(std::int64_t base) { index_base_ = base; }
  std::int64_t index_base() const { return index_base_; }
  std::int64_t label(Vertex v) const { return static_cast<std::int64_t>(v) + index_base_; }

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size() / 2; }
  std::size_t max_degree() const { return max_degree_; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  bool has_edge(Vertex u, Vertex v) const;

  bool weighted() const { return !weights_.empty(); }
  double weight(Vertex v) const { return weights_.empty() ? 1.0 : weights_[v]; }
  /// Empty for unweighted graphs.
  std::span<const double> weights() const { return weights_; }
  double total_weight() const;

  /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<double> weights_;
  std::size_t max_degree_ = 0;
  std::int64_t index_base_ = 0;
};

}  // namespace domset
