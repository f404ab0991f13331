#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "domset/graph.h"

namespace domset {

/// A vertex subset with incrementally maintained domination counts.
///
/// dominated_count(v) is the number of members in the closed neighborhood
/// N[v]. Members are kept in insertion order (removal swaps the last member
/// into the hole). The graph must outlive the solution.
class Solution {
 public:
  explicit Solution(const Graph& graph);
  Solution(const Graph& graph, std::span<const Vertex> members);

  const Graph& graph() const { return *graph_; }

  /// No-op when v is already a member.
  void add(Vertex v);
  /// No-op when v is not a member.
  void remove(Vertex v);
  void clear();

  bool contains(Vertex v) const { return position_[v] != kAbsent; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  double total_weight() const { return total_weight_; }

  std::span<const Vertex> members() const { return members_; }
  std::vector<Vertex> sorted_members() const;

  std::uint32_t dominated_count(Vertex v) const { return dominated_count_[v]; }
  std::size_t num_undominated() const { return undominated_; }
  bool is_dominating() const { return undominated_ == 0; }

 private:
  static constexpr std::uint32_t kAbsent = UINT32_MAX;

  const Graph* graph_;
  std::vector<Vertex> members_;
  std::vector<std::uint32_t> position_;
  std::vector<std::uint32_t> dominated_count_;
  std::size_t undominated_;
  double total_weight_ = 0.0;
};

/// True iff every vertex is in `set` or adjacent to a member. Ids must be < n.
bool is_dominating_set(const Graph& g, std::span<const Vertex> set);

/// Number of non-dominated vertices in N[v] with respect to s.
std::size_t coverage_gain(const Graph& g, Vertex v, const Solution& s);

/// Members whose sole removal keeps s dominating, in ascending id order.
/// Throws InvalidArgument when s is not dominating.
std::vector<Vertex> redundant_vertices(const Graph& g, const Solution& s);

}  // namespace domset
