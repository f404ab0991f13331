#pragma once

// Ant colony baselines for MDS with redundant-vertex local search.
//
//   kLs    pheromone-proportional construction over the whole graph
//   kPpLs  the same, seeded by boosting vertices of random maximal
//          independent sets before the first iteration
//   kLsS   construction walks along graph edges; pheromone starts high on a
//          greedy solution

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "domset/graph.h"
#include "domset/order_search.h"
#include "domset/rng.h"
#include "domset/solution.h"

namespace domset {

enum class AcoVariant { kLs, kPpLs, kLsS };
AcoVariant parse_aco_variant(std::string_view name);
std::string_view aco_variant_name(AcoVariant variant);

struct AcoConfig {
  AcoVariant variant = AcoVariant::kLs;
  std::size_t ants = 20;
  double evaporation = 0.985;
  double random_removal_prob = 0.6;
  double initial_pheromone = 10.0;
  double update_p1 = 1.0;
  double update_p2 = 10.0;
  std::size_t preprocess_sets = 100;  // kPpLs only
  double greedy_pheromone = 1000.0;   // kLsS: on members of the greedy set
  double base_pheromone = 10.0;       // kLsS: everywhere else (replaces initial_pheromone)
  std::optional<Seconds> time_limit;
  std::optional<std::uint64_t> max_iterations;
  std::optional<std::uint64_t> max_evaluations;
  std::optional<std::size_t> lower_bound;
  std::uint64_t seed = 0;
  /// Build the ants of one iteration on OpenMP threads. Results are identical
  /// either way: every ant has its own seed and reads a frozen pheromone state.
  bool parallel_ants = true;

  struct Step {
    std::uint64_t iteration;
    std::size_t iteration_best;
    std::size_t global_best;
    std::span<const double> tau;
    /// Post local-search sets of this iteration, one per ant.
    std::span<const std::vector<Vertex>> ant_sets;
  };
  std::function<void(const Step&)> observer;

  /// Defaults for a variant, including its pheromone update parameters
  /// (1/10 for kLs and kLsS, 2/5 for kPpLs).
  static AcoConfig defaults(AcoVariant variant);
  void validate() const;
};

struct PheromoneState {
  std::vector<double> tau;
  std::size_t iter_best_size = 0;
  std::size_t global_best_size = SIZE_MAX;
};

/// Builds a dominating set by pheromone-proportional draws from the vertices
/// whose coverage gain is still >= 1. For kLsS the draw is restricted to
/// eligible neighbors of the previously added vertex whenever one exists;
/// the first vertex (and any stranded step) draws from the whole pool.
Solution construct_ant_solution(const Graph& g, std::span<const double> tau, AcoVariant variant,
                                Rng& rng);

/// Removes redundant members one at a time: with probability p_r a uniformly
/// random redundant member, otherwise the one of minimum degree (lowest id on
/// ties), until none remain. Throws InvalidArgument when s is not dominating.
void remove_redundant(const Graph& g, Solution& s, double p_r, Rng& rng);

/// p1 / (p2 - f + F), with the denominator clamped to 1e-6 when it is <= 0.
double pheromone_deposit(double p1, double p2, std::size_t f, std::size_t global_best);

/// Lowers the global best to f = |iter_best| when it improves, evaporates
/// every vertex by rho and deposits on members of iter_best.
void pheromone_update(PheromoneState& state, std::span<const Vertex> iter_best,
                      const AcoConfig& cfg);

/// Random-order greedy maximal independent set.
std::vector<Vertex> random_maximal_independent_set(const Graph& g, Rng& rng);

/// Builds `sets` maximal independent sets and deposits p1/p2 on every member of
/// each. Returns the total number of deposits made.
std::size_t preprocess_independent_sets(const Graph& g, PheromoneState& state, std::size_t sets,
                                        const AcoConfig& cfg, Rng& rng);

/// Full colony run. Evaluations count post local-search sets.
RunTrace aco_run(const Graph& g, const AcoConfig& cfg);

}  // namespace domset
