#pragma once

// Order-based randomised local search for minimum dominating set.
//
// The search state is a vertex permutation. A greedy decoder scans it front
// to back and keeps a vertex iff the vertex or one of its neighbors is still
// non-dominated. The only move is a jump: the element at some position is
// moved to the front. Every dominating set S has a permutation that decodes
// to a subset of S (put S first), so an optimal permutation always exists.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "domset/graph.h"
#include "domset/rng.h"
#include "domset/solution.h"

namespace domset {

/// A bijection on {0..n-1} together with its inverse.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `order` is a permutation of 0..n-1.
  explicit Permutation(std::vector<Vertex> order);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  std::span<const Vertex> order() const { return order_; }
  Vertex operator[](std::size_t index) const { return order_[index]; }
  std::size_t position(Vertex v) const { return position_[v]; }

  /// Moves the element at 1-based position j (2 <= j <= n) to the front;
  /// positions 1..j-1 shift right by one. O(j).
  void jump(std::size_t j);
  /// Exact inverse of jump(j).
  void unjump(std::size_t j);

  /// Rebuilds the inverse from scratch and compares.
  bool consistent() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.order_ == b.order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> position_;
};

/// Value form of Permutation::jump. Throws InvalidArgument when j is out of range.
Permutation jump(std::size_t j, Permutation p);

/// Reusable greedy decoder. Keeps an epoch-stamped domination array so a
/// decode touches only the scanned prefix and its neighborhoods.
class GreedyDecoder {
 public:
  explicit GreedyDecoder(const Graph& g);

  /// Writes the decoded members (in scan order) to `out`; returns their
  /// total weight. Stops as soon as every vertex is dominated.
  double decode(const Permutation& p, std::vector<Vertex>& out);

 private:
  const Graph* graph_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

/// Decodes a permutation into a dominating set.
Solution greedy_map(const Graph& g, const Permutation& p);

/// Members of s first in ascending id order, the rest in uniformly random
/// order. Throws InvalidArgument when s is not dominating.
Permutation set_to_permutation(const Graph& g, std::span<const Vertex> s, Rng& rng);
Permutation set_to_permutation(const Graph& g, const Solution& s, Rng& rng);

enum class StopReason { kTimeLimit, kLowerBound, kIterationCap, kEvaluationCap, kCycleCap };
std::string_view stop_reason_name(StopReason reason);

struct TracePoint {
  double elapsed_ms = 0.0;
  std::uint64_t iteration = 0;
  double value = 0.0;
};

struct RunTrace {
  std::uint64_t iterations = 0;   // proposals (jump moves)
  std::uint64_t evaluations = 0;  // decoder calls / constructed sets
  std::uint64_t cycles = 0;       // restarts + 1 (multi-start search only)
  /// Best value after initialization and after every strict improvement.
  std::vector<TracePoint> history;
  std::vector<Vertex> best;  // ascending ids
  double best_value = 0.0;   // |best| or its weight
  StopReason stop = StopReason::kIterationCap;
  double elapsed_ms = 0.0;
};

using Clock = std::chrono::steady_clock;
using Seconds = std::chrono::duration<double>;

struct RlsoConfig {
  std::optional<Seconds> time_limit;
  std::optional<std::uint64_t> max_iterations;
  std::optional<std::size_t> lower_bound;
  std::uint64_t seed = 0;
  /// Called after every proposal with (iteration, incumbent size).
  std::function<void(std::uint64_t, std::size_t)> observer;

  void validate() const;
};

/// Greedy initialization, then jump + decode, accepting when |S'| <= |S|.
/// Stops on the time limit (checked every 256 proposals), the iteration cap,
/// or when |S| <= lower_bound. The greedy start is evaluation 0.
RunTrace rlso_run(const Graph& g, const RlsoConfig& cfg);

}  // namespace domset
