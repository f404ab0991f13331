#include "domset/greedy.h"

#include <algorithm>
#include <queue>

#include "domset/errors.h"

namespace domset {
namespace {

// Vertices bucketed by exact integer gain. Gains only decrease, so the
// maximum pointer only moves down.
class GainBuckets {
 public:
  explicit GainBuckets(const Graph& g)
      : gain_(g.num_vertices()), slot_(g.num_vertices()), buckets_(g.max_degree() + 2) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      gain_[v] = static_cast<std::uint32_t>(g.degree(v) + 1);
      slot_[v] = static_cast<std::uint32_t>(buckets_[gain_[v]].size());
      buckets_[gain_[v]].push_back(v);
    }
    top_ = buckets_.size() - 1;
  }

  std::uint32_t gain(Vertex v) const { return gain_[v]; }

  void decrement(Vertex v) {
    auto& from = buckets_[gain_[v]];
    const Vertex last = from.back();
    from[slot_[v]] = last;
    slot_[last] = slot_[v];
    from.pop_back();
    --gain_[v];
    slot_[v] = static_cast<std::uint32_t>(buckets_[gain_[v]].size());
    buckets_[gain_[v]].push_back(v);
  }

  Vertex draw_max(Rng& rng) {
    while (top_ > 0 && buckets_[top_].empty()) --top_;
    const auto& bucket = buckets_[top_];
    return bucket[rng.below(bucket.size())];
  }

 private:
  std::vector<std::uint32_t> gain_;
  std::vector<std::uint32_t> slot_;
  std::vector<std::vector<Vertex>> buckets_;
  std::size_t top_ = 0;
};

// Adds v and reports every vertex that became dominated through `on_dominated`.
template <typename Fn>
void add_and_notify(const Graph& g, Solution& s, Vertex v, std::vector<Vertex>& scratch,
                    Fn&& on_dominated) {
  scratch.clear();
  if (s.dominated_count(v) == 0) scratch.push_back(v);
  for (Vertex u : g.neighbors(v)) {
    if (s.dominated_count(u) == 0) scratch.push_back(u);
  }
  s.add(v);
  for (Vertex u : scratch) on_dominated(u);
}

}  // namespace

Solution greedy_mds(const Graph& g, Rng& rng) {
  Solution s(g);
  if (g.num_vertices() == 0) return s;
  GainBuckets buckets(g);
  std::vector<Vertex> newly;
  while (!s.is_dominating()) {
    const Vertex v = buckets.draw_max(rng);
    add_and_notify(g, s, v, newly, [&](Vertex u) {
      buckets.decrement(u);
      for (Vertex w : g.neighbors(u)) buckets.decrement(w);
    });
  }
  return s;
}

Solution greedy_mwds(const Graph& g, Rng& rng) {
  Solution s(g);
  const std::size_t n = g.num_vertices();
  if (n == 0) return s;

  std::vector<std::uint32_t> gain(n);
  struct Entry {
    double key;
    Vertex v;
    bool operator<(const Entry& other) const { return key < other.key; }
  };
  std::priority_queue<Entry> heap;
  auto priority = [&](Vertex v) { return static_cast<double>(gain[v]) / g.weight(v); };
  for (Vertex v = 0; v < n; ++v) {
    gain[v] = static_cast<std::uint32_t>(g.degree(v) + 1);
    heap.push({priority(v), v});
  }

  // Lazy deletion: an entry is stale when its key no longer matches; since
  // priorities only decrease, a stale key is an upper bound.
  auto fresh = [&](const Entry& e) { return gain[e.v] > 0 && e.key == priority(e.v); };
  std::vector<Vertex> candidates;
  std::vector<Vertex> newly;
  while (!s.is_dominating()) {
    while (!fresh(heap.top())) {
      const Entry e = heap.top();
      heap.pop();
      if (gain[e.v] > 0 && !s.contains(e.v)) heap.push({priority(e.v), e.v});
    }
    const double best = heap.top().key;
    candidates.clear();
    while (!heap.empty() && heap.top().key == best) {
      const Entry e = heap.top();
      heap.pop();
      if (fresh(e)) {
        candidates.push_back(e.v);
      } else if (gain[e.v] > 0) {
        heap.push({priority(e.v), e.v});  // strictly below `best`
      }
    }
    const std::size_t pick = rng.below(candidates.size());
    const Vertex v = candidates[pick];
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (i != pick) heap.push({best, candidates[i]});
    }
    add_and_notify(g, s, v, newly, [&](Vertex u) {
      --gain[u];
      for (Vertex w : g.neighbors(u)) --gain[w];
    });
  }
  return s;
}

double objective_value(const Graph& g, const Solution& s, Objective objective) {
  (void)g;
  return objective == Objective::kCardinality ? static_cast<double>(s.size()) : s.total_weight();
}

namespace {

double run_once(const Graph& g, std::uint64_t seed, Objective objective, std::vector<Vertex>* keep) {
  Rng rng(seed);
  Solution s = objective == Objective::kCardinality ? greedy_mds(g, rng) : greedy_mwds(g, rng);
  if (keep != nullptr) *keep = s.sorted_members();
  return objective_value(g, s, objective);
}

GreedyStats summarize(const Graph& g, std::vector<double> values, std::uint64_t seed,
                      Objective objective) {
  GreedyStats stats;
  const auto best = std::min_element(values.begin(), values.end());
  const auto best_run = static_cast<std::uint64_t>(best - values.begin());
  stats.min = *best;
  stats.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(values.size());
  stats.best_seed = mix_seed(seed, best_run);
  run_once(g, stats.best_seed, objective, &stats.best);
  stats.values = std::move(values);
  return stats;
}

}  // namespace

GreedyStats repeated_greedy(const Graph& g, std::size_t repeats, std::uint64_t seed,
                            Objective objective) {
  if (repeats == 0) throw InvalidArgument("repeated_greedy: repeats must be >= 1");
  std::vector<double> values(repeats);
  const auto count = static_cast<std::ptrdiff_t>(repeats);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    values[static_cast<std::size_t>(k)] =
        run_once(g, mix_seed(seed, static_cast<std::uint64_t>(k)), objective, nullptr);
  }
  return summarize(g, std::move(values), seed, objective);
}

GreedyStats repeated_greedy_serial(const Graph& g, std::size_t repeats, std::uint64_t seed,
                                   Objective objective) {
  if (repeats == 0) throw InvalidArgument("repeated_greedy: repeats must be >= 1");
  std::vector<double> values(repeats);
  for (std::size_t k = 0; k < repeats; ++k) values[k] = run_once(g, mix_seed(seed, k), objective, nullptr);
  return summarize(g, std::move(values), seed, objective);
}

double harmonic_number(std::size_t k) {
  double h = 0.0;
  for (std::size_t i = 1; i <= k; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

}  // namespace domset
