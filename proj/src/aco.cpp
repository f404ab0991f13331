#include "domset/aco.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "domset/errors.h"
#include "domset/greedy.h"

namespace domset {
namespace {

constexpr double kDepositEpsilon = 1e-6;
// Evaporation is multiplicative; the floor keeps long runs from underflowing to 0.
constexpr double kMinPheromone = std::numeric_limits<double>::min();

// Complete binary sum tree. Internal sums are recomputed from children on
// every update, so zeroed leaves stay exactly zero.
class SumTree {
 public:
  explicit SumTree(std::span<const double> values)
      : leaves_(std::bit_ceil(std::max<std::size_t>(values.size(), 1))), node_(2 * leaves_, 0.0) {
    std::copy(values.begin(), values.end(), node_.begin() + static_cast<std::ptrdiff_t>(leaves_));
    for (std::size_t i = leaves_ - 1; i > 0; --i) node_[i] = node_[2 * i] + node_[2 * i + 1];
  }

  double total() const { return node_[1]; }

  void set(std::size_t index, double value) {
    std::size_t i = index + leaves_;
    node_[i] = value;
    for (i /= 2; i > 0; i /= 2) node_[i] = node_[2 * i] + node_[2 * i + 1];
  }

  std::size_t sample(double u) const {
    double r = u * node_[1];
    std::size_t i = 1;
    while (i < leaves_) {
      const double left = node_[2 * i];
      if (left > 0.0 && (r < left || node_[2 * i + 1] <= 0.0)) {
        i = 2 * i;
      } else {
        r -= left;
        i = 2 * i + 1;
      }
    }
    return i - leaves_;
  }

 private:
  std::size_t leaves_;
  std::vector<double> node_;
};

}  // namespace

AcoVariant parse_aco_variant(std::string_view name) {
  if (name == "ls" || name == "aco-ls") return AcoVariant::kLs;
  if (name == "pp-ls" || name == "aco-pp-ls") return AcoVariant::kPpLs;
  if (name == "ls-s" || name == "aco-ls-s") return AcoVariant::kLsS;
  throw InvalidArgument("unknown ACO variant '" + std::string(name) + "'");
}

std::string_view aco_variant_name(AcoVariant variant) {
  switch (variant) {
    case AcoVariant::kLs: return "aco-ls";
    case AcoVariant::kPpLs: return "aco-pp-ls";
    case AcoVariant::kLsS: return "aco-ls-s";
  }
  return "unknown";
}

AcoConfig AcoConfig::defaults(AcoVariant variant) {
  AcoConfig cfg;
  cfg.variant = variant;
  if (variant == AcoVariant::kPpLs) {
    cfg.update_p1 = 2.0;
    cfg.update_p2 = 5.0;
  }
  return cfg;
}

void AcoConfig::validate() const {
  if (ants < 1) throw InvalidArgument("aco: need at least one ant");
  if (!(evaporation > 0.0 && evaporation < 1.0)) throw InvalidArgument("aco: evaporation must be in (0, 1)");
  if (!(random_removal_prob >= 0.0 && random_removal_prob <= 1.0)) {
    throw InvalidArgument("aco: random removal probability must be in [0, 1]");
  }
  if (!(initial_pheromone > 0.0) || !(greedy_pheromone > 0.0) || !(base_pheromone > 0.0)) {
    throw InvalidArgument("aco: pheromone values must be positive");
  }
  if (!(update_p1 > 0.0)) throw InvalidArgument("aco: p1 must be positive");
  if (!time_limit && !max_iterations && !max_evaluations && !lower_bound) {
    throw InvalidArgument("aco: at least one stopping criterion is required");
  }
}

Solution construct_ant_solution(const Graph& g, std::span<const double> tau, AcoVariant variant,
                                Rng& rng) {
  const std::size_t n = g.num_vertices();
  if (tau.size() != n) throw InvalidArgument("construct_ant_solution: pheromone size mismatch");
  Solution s(g);
  if (n == 0) return s;

  std::vector<std::uint32_t> gain(n);
  for (Vertex v = 0; v < n; ++v) gain[v] = static_cast<std::uint32_t>(g.degree(v) + 1);
  SumTree pool(tau);

  auto lose_gain = [&](Vertex w) {
    if (--gain[w] == 0) pool.set(w, 0.0);
  };

  std::vector<Vertex> local;
  std::vector<Vertex> newly;
  std::optional<Vertex> last;
  while (!s.is_dominating()) {
    Vertex v = 0;
    bool picked = false;
    if (variant == AcoVariant::kLsS && last) {
      local.clear();
      double sum = 0.0;
      for (Vertex u : g.neighbors(*last)) {
        if (gain[u] > 0) {
          local.push_back(u);
          sum += tau[u];
        }
      }
      if (!local.empty()) {
        double r = rng.uniform() * sum;
        v = local.back();
        for (Vertex u : local) {
          if (r < tau[u]) {
            v = u;
            break;
          }
          r -= tau[u];
        }
        picked = true;
      }
    }
    if (!picked) v = static_cast<Vertex>(pool.sample(rng.uniform()));

    newly.clear();
    if (s.dominated_count(v) == 0) newly.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (s.dominated_count(u) == 0) newly.push_back(u);
    }
    s.add(v);
    for (Vertex u : newly) {
      lose_gain(u);
      for (Vertex w : g.neighbors(u)) lose_gain(w);
    }
    last = v;
  }
  return s;
}

void remove_redundant(const Graph& g, Solution& s, double p_r, Rng& rng) {
  std::vector<Vertex> redundant = redundant_vertices(g, s);
  constexpr auto kAbsent = UINT32_MAX;
  std::vector<std::uint32_t> slot(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < redundant.size(); ++i) slot[redundant[i]] = static_cast<std::uint32_t>(i);

  auto erase = [&](Vertex v) {
    const std::uint32_t i = slot[v];
    if (i == kAbsent) return;
    const Vertex last = redundant.back();
    redundant[i] = last;
    slot[last] = i;
    redundant.pop_back();
    slot[v] = kAbsent;
  };
  // The sole member dominating u, when u is covered exactly once.
  auto sole_dominator = [&](Vertex u) -> Vertex {
    if (s.contains(u)) return u;
    for (Vertex w : g.neighbors(u)) {
      if (s.contains(w)) return w;
    }
    return u;
  };

  while (!redundant.empty()) {
    std::size_t pick = 0;
    if (rng.bernoulli(p_r)) {
      pick = rng.below(redundant.size());
    } else {
      for (std::size_t i = 1; i < redundant.size(); ++i) {
        const Vertex a = redundant[i];
        const Vertex b = redundant[pick];
        if (g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b)) pick = i;
      }
    }
    const Vertex x = redundant[pick];
    erase(x);
    s.remove(x);
    // Counts only fell, so a member can only stop being redundant.
    if (s.dominated_count(x) == 1) erase(sole_dominator(x));
    for (Vertex u : g.neighbors(x)) {
      if (s.dominated_count(u) == 1) erase(sole_dominator(u));
    }
  }
}

double pheromone_deposit(double p1, double p2, std::size_t f, std::size_t global_best) {
  double denominator = p2 - static_cast<double>(f) + static_cast<double>(global_best);
  if (denominator <= 0.0) denominator = kDepositEpsilon;
  return p1 / denominator;
}

void pheromone_update(PheromoneState& state, std::span<const Vertex> iter_best,
                      const AcoConfig& cfg) {
  state.iter_best_size = iter_best.size();
  state.global_best_size = std::min(state.global_best_size, state.iter_best_size);
  const double deposit =
      pheromone_deposit(cfg.update_p1, cfg.update_p2, state.iter_best_size, state.global_best_size);
  for (double& t : state.tau) t = std::max(kMinPheromone, cfg.evaporation * t);
  for (Vertex v : iter_best) state.tau[v] += deposit;
}

std::vector<Vertex> random_maximal_independent_set(const Graph& g, Rng& rng) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  rng.shuffle(std::span<Vertex>(order));
  // Scanning a random order and keeping available vertices is the same as
  // repeatedly drawing a uniformly random available vertex.
  std::vector<char> blocked(n, 0);
  std::vector<Vertex> set;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    set.push_back(v);
    blocked[v] = 1;
    for (Vertex u : g.neighbors(v)) blocked[u] = 1;
  }
  std::sort(set.begin(), set.end());
  return set;
}

std::size_t preprocess_independent_sets(const Graph& g, PheromoneState& state, std::size_t sets,
                                        const AcoConfig& cfg, Rng& rng) {
  const double boost = cfg.update_p1 / cfg.update_p2;
  std::size_t deposits = 0;
  for (std::size_t k = 0; k < sets; ++k) {
    for (Vertex v : random_maximal_independent_set(g, rng)) {
      state.tau[v] += boost;
      ++deposits;
    }
  }
  return deposits;
}

RunTrace aco_run(const Graph& g, const AcoConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  if (n < 1) throw InvalidArgument("aco: empty graph");
  const auto start = Clock::now();
  const auto deadline = cfg.time_limit
                            ? start + std::chrono::duration_cast<Clock::duration>(*cfg.time_limit)
                            : Clock::time_point::max();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };

  Rng rng(cfg.seed);
  PheromoneState state;
  switch (cfg.variant) {
    case AcoVariant::kLs:
      state.tau.assign(n, cfg.initial_pheromone);
      break;
    case AcoVariant::kPpLs:
      state.tau.assign(n, cfg.initial_pheromone);
      preprocess_independent_sets(g, state, cfg.preprocess_sets, cfg, rng);
      break;
    case AcoVariant::kLsS: {
      state.tau.assign(n, cfg.base_pheromone);
      const Solution greedy = greedy_mds(g, rng);
      for (Vertex v : greedy.members()) state.tau[v] = cfg.greedy_pheromone;
      break;
    }
  }

  RunTrace trace;
  std::vector<std::vector<Vertex>> ant_sets(cfg.ants);
  const std::uint64_t run_stream = rng.next();
  const auto ants = static_cast<std::ptrdiff_t>(cfg.ants);

  for (;;) {
    if (cfg.max_iterations && trace.iterations >= *cfg.max_iterations) {
      trace.stop = StopReason::kIterationCap;
      break;
    }
    if (cfg.max_evaluations && trace.evaluations >= *cfg.max_evaluations) {
      trace.stop = StopReason::kEvaluationCap;
      break;
    }
    if (Clock::now() >= deadline) {
      trace.stop = StopReason::kTimeLimit;
      break;
    }

    const std::uint64_t iteration_seed = mix_seed(run_stream, trace.iterations);
    const std::span<const double> tau = state.tau;
#pragma omp parallel for schedule(dynamic) if (cfg.parallel_ants)
    for (std::ptrdiff_t a = 0; a < ants; ++a) {
      Rng ant_rng(mix_seed(iteration_seed, static_cast<std::uint64_t>(a)));
      Solution s = construct_ant_solution(g, tau, cfg.variant, ant_rng);
      remove_redundant(g, s, cfg.random_removal_prob, ant_rng);
      ant_sets[static_cast<std::size_t>(a)] = s.sorted_members();
    }
    trace.evaluations += cfg.ants;
    ++trace.iterations;

    std::size_t best_ant = 0;
    for (std::size_t a = 1; a < cfg.ants; ++a) {
      if (ant_sets[a].size() < ant_sets[best_ant].size()) best_ant = a;
    }
    const auto& iter_best = ant_sets[best_ant];
    if (trace.history.empty() || iter_best.size() < trace.best.size()) {
      trace.best = iter_best;
      trace.history.push_back({elapsed_ms(), trace.iterations, static_cast<double>(iter_best.size())});
    }
    pheromone_update(state, iter_best, cfg);

    if (cfg.observer) {
      cfg.observer({trace.iterations, state.iter_best_size, state.global_best_size, state.tau, ant_sets});
    }
    if (cfg.lower_bound && state.global_best_size <= *cfg.lower_bound) {
      trace.stop = StopReason::kLowerBound;
      break;
    }
  }

  trace.best_value = static_cast<double>(trace.best.size());
  trace.elapsed_ms = elapsed_ms();
  return trace;
}

}  // namespace domset
