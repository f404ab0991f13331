#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "domset/graph.h"
#include "domset/order_search.h"

namespace domset {

struct MsrlsoConfig {
  double p_greedy = 0.5;               // chance a cycle starts from the weighted greedy
  std::uint64_t stall_cap = 2000;      // proposals without improvement before restart
  std::uint64_t extended_cap = 100000; // same, once the cycle improved the global best
  std::uint64_t max_cycles = 5000;
  std::optional<Seconds> time_limit;
  std::optional<std::uint64_t> max_iterations;
  std::uint64_t seed = 0;

  struct Step {
    std::uint64_t iteration;
    std::uint64_t cycle;
    double incumbent;    // weight(S) after the acceptance test
    double candidate;    // weight(S')
    double global_best;  // weight(S_best)
    std::uint64_t stall; // counter i after the update
    bool extended;
  };
  /// Called after every proposal.
  std::function<void(const Step&)> observer;

  void validate() const;
};

/// Multi-start order-based search for minimum weight dominating set.
///
/// A cycle starts (with probability p_greedy) from the weighted greedy set
/// placed first in a random permutation, otherwise from a uniformly random
/// permutation; the start is decoded either way. Each proposal is a random
/// jump followed by a decode. The stall counter increments when
/// weight(S') >= weight(S) and resets otherwise; S' is accepted when
/// weight(S') <= weight(S). Improving the global best extends the current
/// cycle from stall_cap to extended_cap. A cycle ends once the counter
/// exceeds its cap; the search stops after max_cycles cycles, the time
/// limit, or max_iterations proposals.
RunTrace msrlso_run(const Graph& g, const MsrlsoConfig& cfg);

}  // namespace domset
