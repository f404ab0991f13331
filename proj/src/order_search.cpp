#include "domset/order_search.h"

#include <algorithm>

#include "domset/errors.h"
#include "domset/greedy.h"

namespace domset {

Permutation::Permutation(std::vector<Vertex> order) : order_(std::move(order)) {
  constexpr auto kUnset = UINT32_MAX;
  position_.assign(order_.size(), kUnset);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const Vertex v = order_[i];
    if (v >= order_.size() || position_[v] != kUnset) {
      throw InvalidArgument("permutation: not a bijection on 0..n-1");
    }
    position_[v] = static_cast<std::uint32_t>(i);
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  return Permutation(std::move(order));
}

void Permutation::jump(std::size_t j) {
  if (j < 2 || j > order_.size()) {
    throw InvalidArgument("jump: position " + std::to_string(j) + " outside [2, " +
                          std::to_string(order_.size()) + "]");
  }
  const Vertex moved = order_[j - 1];
  for (std::size_t i = j - 1; i > 0; --i) {
    order_[i] = order_[i - 1];
    position_[order_[i]] = static_cast<std::uint32_t>(i);
  }
  order_[0] = moved;
  position_[moved] = 0;
}

void Permutation::unjump(std::size_t j) {
  if (j < 2 || j > order_.size()) {
    throw InvalidArgument("unjump: position " + std::to_string(j) + " out of range");
  }
  const Vertex moved = order_[0];
  for (std::size_t i = 0; i + 1 < j; ++i) {
    order_[i] = order_[i + 1];
    position_[order_[i]] = static_cast<std::uint32_t>(i);
  }
  order_[j - 1] = moved;
  position_[moved] = static_cast<std::uint32_t>(j - 1);
}

bool Permutation::consistent() const {
  if (position_.size() != order_.size()) return false;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] >= order_.size() || position_[order_[i]] != i) return false;
  }
  return true;
}

Permutation jump(std::size_t j, Permutation p) {
  p.jump(j);
  return p;
}

GreedyDecoder::GreedyDecoder(const Graph& g) : graph_(&g), stamp_(g.num_vertices(), 0) {}

double GreedyDecoder::decode(const Permutation& p, std::vector<Vertex>& out) {
  const Graph& g = *graph_;
  out.clear();
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  const std::uint32_t epoch = epoch_;
  std::size_t remaining = g.num_vertices();
  double weight = 0.0;
  for (const Vertex v : p.order()) {
    if (remaining == 0) break;
    bool take = stamp_[v] != epoch;
    if (!take) {
      for (const Vertex u : g.neighbors(v)) {
        if (stamp_[u] != epoch) {
          take = true;
          break;
        }
      }
    }
    if (!take) continue;
    out.push_back(v);
    weight += g.weight(v);
    if (stamp_[v] != epoch) {
      stamp_[v] = epoch;
      --remaining;
    }
    for (const Vertex u : g.neighbors(v)) {
      if (stamp_[u] != epoch) {
        stamp_[u] = epoch;
        --remaining;
      }
    }
  }
  return weight;
}

Solution greedy_map(const Graph& g, const Permutation& p) {
  if (p.size() != g.num_vertices()) throw InvalidArgument("greedy_map: permutation size mismatch");
  GreedyDecoder decoder(g);
  std::vector<Vertex> members;
  decoder.decode(p, members);
  return Solution(g, members);
}

Permutation set_to_permutation(const Graph& g, std::span<const Vertex> s, Rng& rng) {
  if (!is_dominating_set(g, s)) throw InvalidArgument("set_to_permutation: set is not dominating");
  const std::size_t n = g.num_vertices();
  std::vector<char> member(n, 0);
  std::vector<Vertex> head;
  for (Vertex v : s) {
    if (!member[v]) {
      member[v] = 1;
      head.push_back(v);
    }
  }
  std::sort(head.begin(), head.end());
  std::vector<Vertex> tail;
  tail.reserve(n - head.size());
  for (Vertex v = 0; v < n; ++v) {
    if (!member[v]) tail.push_back(v);
  }
  rng.shuffle(std::span<Vertex>(tail));
  head.insert(head.end(), tail.begin(), tail.end());
  return Permutation(std::move(head));
}

Permutation set_to_permutation(const Graph& g, const Solution& s, Rng& rng) {
  return set_to_permutation(g, s.members(), rng);
}

std::string_view stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::kTimeLimit: return "time-limit";
    case StopReason::kLowerBound: return "lower-bound";
    case StopReason::kIterationCap: return "iteration-cap";
    case StopReason::kEvaluationCap: return "evaluation-cap";
    case StopReason::kCycleCap: return "cycle-cap";
  }
  return "unknown";
}

void RlsoConfig::validate() const {
  if (!time_limit && !max_iterations && !lower_bound) {
    throw InvalidArgument("rlso: at least one stopping criterion is required");
  }
  if (lower_bound && *lower_bound < 1) throw InvalidArgument("rlso: lower bound must be >= 1");
}

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

RunTrace rlso_run(const Graph& g, const RlsoConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  if (n < 2) throw InvalidArgument("rlso: graph needs at least two vertices");
  const auto start = Clock::now();
  const auto deadline = cfg.time_limit
                            ? start + std::chrono::duration_cast<Clock::duration>(*cfg.time_limit)
                            : Clock::time_point::max();

  Rng rng(cfg.seed);
  RunTrace trace;
  std::vector<Vertex> current;
  {
    const Solution init = greedy_mds(g, rng);
    current.assign(init.members().begin(), init.members().end());
  }
  Permutation perm = set_to_permutation(g, current, rng);
  trace.history.push_back({ms_since(start), 0, static_cast<double>(current.size())});

  GreedyDecoder decoder(g);
  std::vector<Vertex> candidate;
  candidate.reserve(n);
  current.reserve(n);
  auto at_bound = [&] { return cfg.lower_bound && current.size() <= *cfg.lower_bound; };

  if (at_bound()) {
    trace.stop = StopReason::kLowerBound;
  } else {
    for (;;) {
      if (cfg.max_iterations && trace.iterations >= *cfg.max_iterations) {
        trace.stop = StopReason::kIterationCap;
        break;
      }
      if ((trace.iterations & 255) == 0 && Clock::now() >= deadline) {
        trace.stop = StopReason::kTimeLimit;
        break;
      }
      const auto j = static_cast<std::size_t>(rng.between(2, n));
      perm.jump(j);
      decoder.decode(perm, candidate);
      ++trace.iterations;
      ++trace.evaluations;
      if (candidate.size() <= current.size()) {
        const bool improved = candidate.size() < current.size();
        current.swap(candidate);
        if (improved) {
          trace.history.push_back(
              {ms_since(start), trace.iterations, static_cast<double>(current.size())});
        }
      } else {
        perm.unjump(j);
      }
      if (cfg.observer) cfg.observer(trace.iterations, current.size());
      if (at_bound()) {
        trace.stop = StopReason::kLowerBound;
        break;
      }
    }
  }

  std::sort(current.begin(), current.end());
  trace.best = std::move(current);
  trace.best_value = static_cast<double>(trace.best.size());
  trace.elapsed_ms = ms_since(start);
  return trace;
}

}  // namespace domset
