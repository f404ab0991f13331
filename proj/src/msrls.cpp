#include "domset/msrls.h"

#include <algorithm>
#include <numeric>

#include "domset/errors.h"
#include "domset/greedy.h"

namespace domset {

void MsrlsoConfig::validate() const {
  if (!(p_greedy >= 0.0 && p_greedy <= 1.0)) throw InvalidArgument("msrlso: p_greedy must be in [0, 1]");
  if (stall_cap > extended_cap) throw InvalidArgument("msrlso: stall cap exceeds extended cap");
  if (max_cycles < 1) throw InvalidArgument("msrlso: max_cycles must be >= 1");
}

RunTrace msrlso_run(const Graph& g, const MsrlsoConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  if (n < 2) throw InvalidArgument("msrlso: graph needs at least two vertices");
  const auto start = Clock::now();
  const auto deadline = cfg.time_limit
                            ? start + std::chrono::duration_cast<Clock::duration>(*cfg.time_limit)
                            : Clock::time_point::max();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };

  Rng rng(cfg.seed);
  GreedyDecoder decoder(g);
  Permutation perm;
  std::vector<Vertex> current;
  std::vector<Vertex> candidate;
  double current_weight = 0.0;

  auto initialize = [&] {
    if (rng.bernoulli(cfg.p_greedy)) {
      const Solution s = greedy_mwds(g, rng);
      perm = set_to_permutation(g, s, rng);
    } else {
      std::vector<Vertex> order(n);
      std::iota(order.begin(), order.end(), Vertex{0});
      rng.shuffle(std::span<Vertex>(order));
      perm = Permutation(std::move(order));
    }
    current_weight = decoder.decode(perm, current);
  };

  RunTrace trace;
  initialize();
  trace.cycles = 1;
  std::vector<Vertex> best = current;
  double best_weight = current_weight;
  trace.history.push_back({elapsed_ms(), 0, best_weight});

  std::uint64_t stall = 0;
  bool extended = false;
  for (;;) {
    if (cfg.max_iterations && trace.iterations >= *cfg.max_iterations) {
      trace.stop = StopReason::kIterationCap;
      break;
    }
    if ((trace.iterations & 255) == 0 && Clock::now() >= deadline) {
      trace.stop = StopReason::kTimeLimit;
      break;
    }
    if ((!extended && stall > cfg.stall_cap) || (extended && stall > cfg.extended_cap)) {
      if (trace.cycles >= cfg.max_cycles) {
        trace.stop = StopReason::kCycleCap;
        break;
      }
      initialize();
      ++trace.cycles;
      stall = 0;
      extended = false;
    }

    const auto j = static_cast<std::size_t>(rng.between(2, n));
    perm.jump(j);
    const double candidate_weight = decoder.decode(perm, candidate);
    ++trace.iterations;
    ++trace.evaluations;

    if (candidate_weight >= current_weight) {
      ++stall;
    } else {
      stall = 0;
    }
    if (candidate_weight <= current_weight) {
      current.swap(candidate);
      current_weight = candidate_weight;
      if (best_weight > current_weight) {
        best = current;
        best_weight = current_weight;
        extended = true;
        trace.history.push_back({elapsed_ms(), trace.iterations, best_weight});
      }
    } else {
      perm.unjump(j);
    }
    if (cfg.observer) {
      cfg.observer({trace.iterations, trace.cycles, current_weight, candidate_weight, best_weight,
                    stall, extended});
    }
  }

  std::sort(best.begin(), best.end());
  trace.best = std::move(best);
  trace.best_value = best_weight;
  trace.elapsed_ms = elapsed_ms();
  return trace;
}

}  // namespace domset
