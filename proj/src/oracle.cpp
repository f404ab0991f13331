#include "domset/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "domset/errors.h"

namespace domset {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> masks(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Mask m = Mask{1} << v;
    for (Vertex u : g.neighbors(v)) m |= Mask{1} << u;
    masks[v] = m;
  }
  return masks;
}

Mask full_mask(std::size_t n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<Vertex> members_of(Mask chosen) {
  std::vector<Vertex> out;
  for (Mask m = chosen; m != 0; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

// Every dominating set contains a member of N[u] for the lowest
// non-dominated u, so branching over N[u] with a size budget visits each
// candidate cardinality exhaustively.
class MdsSearch {
 public:
  explicit MdsSearch(const Graph& g) : masks_(closed_masks(g)), full_(full_mask(g.num_vertices())) {}

  bool search(Mask covered, Mask chosen, std::size_t budget) {
    if (covered == full_) {
      found_ = chosen;
      return true;
    }
    if (budget == 0) return false;
    const auto u = static_cast<Vertex>(std::countr_zero(~covered & full_));
    for (Mask cand = masks_[u]; cand != 0; cand &= cand - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(cand));
      if (search(covered | masks_[w], chosen | (Mask{1} << w), budget - 1)) return true;
    }
    return false;
  }

  Mask found() const { return found_; }

 private:
  std::vector<Mask> masks_;
  Mask full_;
  Mask found_ = 0;
};

class MwdsSearch {
 public:
  explicit MwdsSearch(const Graph& g) : g_(g), masks_(closed_masks(g)), full_(full_mask(g.num_vertices())) {
    by_weight_.resize(g.num_vertices());
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (Mask cand = masks_[u]; cand != 0; cand &= cand - 1) {
        by_weight_[u].push_back(static_cast<Vertex>(std::countr_zero(cand)));
      }
      std::stable_sort(by_weight_[u].begin(), by_weight_[u].end(),
                       [&](Vertex a, Vertex b) { return g.weight(a) < g.weight(b); });
    }
  }

  void search(Mask covered, Mask chosen, double weight) {
    if (covered == full_) {
      if (weight < best_) {
        best_ = weight;
        best_mask_ = chosen;
      }
      return;
    }
    const auto u = static_cast<Vertex>(std::countr_zero(~covered & full_));
    for (Vertex w : by_weight_[u]) {
      const double next = weight + g_.weight(w);
      if (next >= best_) break;  // candidates are sorted by weight
      search(covered | masks_[w], chosen | (Mask{1} << w), next);
    }
  }

  double best() const { return best_; }
  Mask best_mask() const { return best_mask_; }

 private:
  const Graph& g_;
  std::vector<Mask> masks_;
  std::vector<std::vector<Vertex>> by_weight_;
  Mask full_;
  double best_ = std::numeric_limits<double>::infinity();
  Mask best_mask_ = 0;
};

}  // namespace

OracleResult brute_force_mds(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMdsOracleLimit) {
    throw InvalidArgument("brute_force_mds: " + std::to_string(n) + " vertices exceeds the limit of " +
                          std::to_string(kMdsOracleLimit));
  }
  MdsSearch search(g);
  for (std::size_t k = 0; k <= n; ++k) {
    if (search.search(0, 0, k)) break;
  }
  OracleResult result;
  result.members = members_of(search.found());
  result.value = static_cast<double>(result.members.size());
  return result;
}

OracleResult brute_force_mwds(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMwdsOracleLimit) {
    throw InvalidArgument("brute_force_mwds: " + std::to_string(n) + " vertices exceeds the limit of " +
                          std::to_string(kMwdsOracleLimit));
  }
  OracleResult result;
  if (n == 0) return result;
  MwdsSearch search(g);
  search.search(0, 0, 0.0);
  result.members = members_of(search.best_mask());
  double total = 0.0;
  for (Vertex v : result.members) total += g.weight(v);
  result.value = total;
  return result;
}

}  // namespace domset
