#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "domset/graph.h"
#include "domset/rng.h"
#include "domset/solution.h"

namespace domset {

/// Chvatal-style greedy for MDS: repeatedly adds a vertex of maximum
/// coverage gain, breaking ties uniformly at random. Exact gains are kept in
/// a bucket queue, so a run costs O(n + m).
Solution greedy_mds(const Graph& g, Rng& rng);

/// Weighted greedy for MWDS: maximizes (non-dominated vertices in N[v]) / w(v)
/// with uniform random tie-breaking among exact ties.
Solution greedy_mwds(const Graph& g, Rng& rng);

enum class Objective { kCardinality, kWeight };

/// Objective value of a member set: |S| or its total weight.
double objective_value(const Graph& g, const Solution& s, Objective objective);

struct GreedyStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::vector<double> values;     // per run, in run order
  std::vector<Vertex> best;       // members of the first run attaining min
  std::uint64_t best_seed = 0;
};

/// Independent greedy runs; run k is seeded with mix_seed(seed, k). Runs are
/// spread over OpenMP threads; the result does not depend on the thread count.
GreedyStats repeated_greedy(const Graph& g, std::size_t repeats, std::uint64_t seed,
                            Objective objective = Objective::kCardinality);
/// Single-threaded reference for repeated_greedy.
GreedyStats repeated_greedy_serial(const Graph& g, std::size_t repeats, std::uint64_t seed,
                                   Objective objective = Objective::kCardinality);

/// H(k) = 1 + 1/2 + ... + 1/k.
double harmonic_number(std::size_t k);

}  // namespace domset
