#include "domset/solution.h"

#include <algorithm>

#include "domset/errors.h"

namespace domset {

Solution::Solution(const Graph& graph)
    : graph_(&graph),
      position_(graph.num_vertices(), kAbsent),
      dominated_count_(graph.num_vertices(), 0),
      undominated_(graph.num_vertices()) {}

Solution::Solution(const Graph& graph, std::span<const Vertex> members) : Solution(graph) {
  for (Vertex v : members) {
    if (v >= graph.num_vertices()) {
      throw RangeError("vertex " + std::to_string(v) + " outside graph");
    }
    add(v);
  }
}

void Solution::add(Vertex v) {
  if (contains(v)) return;
  position_[v] = static_cast<std::uint32_t>(members_.size());
  members_.push_back(v);
  total_weight_ += graph_->weight(v);
  if (dominated_count_[v]++ == 0) --undominated_;
  for (Vertex u : graph_->neighbors(v)) {
    if (dominated_count_[u]++ == 0) --undominated_;
  }
}

void Solution::remove(Vertex v) {
  if (!contains(v)) return;
  const std::uint32_t pos = position_[v];
  const Vertex last = members_.back();
  members_[pos] = last;
  position_[last] = pos;
  members_.pop_back();
  position_[v] = kAbsent;
  total_weight_ -= graph_->weight(v);
  if (members_.empty()) total_weight_ = 0.0;
  if (--dominated_count_[v] == 0) ++undominated_;
  for (Vertex u : graph_->neighbors(v)) {
    if (--dominated_count_[u] == 0) ++undominated_;
  }
}

void Solution::clear() {
  for (Vertex v : members_) position_[v] = kAbsent;
  members_.clear();
  std::fill(dominated_count_.begin(), dominated_count_.end(), 0);
  undominated_ = dominated_count_.size();
  total_weight_ = 0.0;
}

std::vector<Vertex> Solution::sorted_members() const {
  std::vector<Vertex> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_dominating_set(const Graph& g, std::span<const Vertex> set) {
  const std::size_t n = g.num_vertices();
  std::vector<char> dominated(n, 0);
  std::size_t remaining = n;
  auto mark = [&](Vertex u) {
    if (!dominated[u]) {
      dominated[u] = 1;
      --remaining;
    }
  };
  for (Vertex v : set) {
    if (v >= n) throw RangeError("vertex " + std::to_string(v) + " outside graph");
    mark(v);
    for (Vertex u : g.neighbors(v)) mark(u);
  }
  return remaining == 0;
}

std::size_t coverage_gain(const Graph& g, Vertex v, const Solution& s) {
  std::size_t gain = s.dominated_count(v) == 0 ? 1 : 0;
  for (Vertex u : g.neighbors(v)) {
    if (s.dominated_count(u) == 0) ++gain;
  }
  return gain;
}

std::vector<Vertex> redundant_vertices(const Graph& g, const Solution& s) {
  if (!s.is_dominating()) throw InvalidArgument("redundant_vertices: set is not dominating");
  std::vector<Vertex> out;
  for (Vertex v : s.members()) {
    bool redundant = s.dominated_count(v) >= 2;
    for (Vertex u : g.neighbors(v)) {
      if (!redundant) break;
      redundant = s.dominated_count(u) >= 2;
    }
    if (redundant) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace domset
