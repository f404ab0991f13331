#pragma once

// Exact solvers for tiny graphs, used as ground truth in tests.

#include <cstddef>
#include <vector>

#include "domset/graph.h"

namespace domset {

inline constexpr std::size_t kMdsOracleLimit = 30;
inline constexpr std::size_t kMwdsOracleLimit = 25;

struct OracleResult {
  std::vector<Vertex> members;  // ascending ids
  double value = 0.0;           // gamma, or the minimum weight
};

/// Minimum dominating set by enumerating subsets in increasing cardinality
/// over closed-neighborhood bitmasks. Throws InvalidArgument when n > 30.
OracleResult brute_force_mds(const Graph& g);

/// Minimum weight dominating set by exhaustive branching with weight
/// pruning. Throws InvalidArgument when n > 25.
OracleResult brute_force_mwds(const Graph& g);

}  // namespace domset
