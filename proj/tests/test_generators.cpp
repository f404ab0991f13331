#include <doctest.h>

#include <cmath>
#include <set>

#include "domset/errors.h"
#include "domset/generators.h"
#include "support.h"

using namespace domset;

namespace {

bool connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.num_vertices();
}

}  // namespace

TEST_CASE("unit disk: hand-placed points") {
  const std::vector<Point> pts{{0, 0}, {100, 0}, {300, 0}};
  const Graph g = unit_disk_graph(pts, 150.0);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
  // Distance exactly equal to the range is an edge.
  CHECK(unit_disk_graph(std::vector<Point>{{0, 0}, {3, 4}}, 5.0).num_edges() == 1);
}

TEST_CASE("unit disk: range beyond the diagonal gives a complete graph") {
  const auto u = gen_unit_disk({40, 100.0, 100.0 * std::sqrt(2.0) + 1e-9, 3});
  CHECK(u.graph.num_edges() == 40 * 39 / 2);
  for (const Point& p : u.points) {
    CHECK(p.x >= 0.0);
    CHECK(p.x <= 100.0);
    CHECK(p.y >= 0.0);
    CHECK(p.y <= 100.0);
  }
}

TEST_CASE("unit disk adjacency is the pairwise distance predicate") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto u = gen_unit_disk({200, 1000.0, 150.0, seed});
    std::set<Edge> expected;
    for (Vertex a = 0; a < 200; ++a) {
      for (Vertex b = a + 1; b < 200; ++b) {
        const double dx = u.points[a].x - u.points[b].x;
        const double dy = u.points[a].y - u.points[b].y;
        if (std::hypot(dx, dy) <= 150.0) expected.insert({a, b});
      }
    }
    const auto edges = u.graph.edges();
    CHECK(std::set<Edge>(edges.begin(), edges.end()) == expected);
  }
}

TEST_CASE("parallel and serial unit disk kernels agree") {
  Rng rng(8);
  for (int t = 0; t < 8; ++t) {
    std::vector<Point> pts(500 + rng.below(1500));
    for (auto& p : pts) p = {rng.uniform(0, 2000), rng.uniform(0, 2000)};
    const double range = rng.uniform(20, 300);
    CHECK(unit_disk_edges(pts, range) == unit_disk_edges_serial(pts, range));
  }
}

TEST_CASE("BA edge count and parameter checks") {
  const Graph g = gen_ba({500, 2, 1});
  CHECK(g.num_vertices() == 500);
  CHECK(g.num_edges() == 997);
  const Graph p5 = gen_ba({5, 5, 1});
  CHECK(p5.num_edges() == 4);
  CHECK(p5.edges() == testing::path(5).edges());
  for (std::size_t w : {1, 3, 7}) CHECK(gen_ba({300, w, 4}).num_edges() == (w - 1) + (300 - w) * w);
  CHECK_THROWS_AS(gen_ba({5, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(gen_ba({5, 6, 1}), InvalidArgument);
}

TEST_CASE("BA degrees are heavy-tailed") {
  CHECK(gen_ba({200, 2, 1}).max_degree() < gen_ba({20000, 2, 1}).max_degree());
  CHECK(gen_ba({20000, 2, 1}).max_degree() > 50);
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(gen_ba({1000, 3, 42}).edges() == gen_ba({1000, 3, 42}).edges());
  CHECK(gen_ba({1000, 3, 42}).edges() != gen_ba({1000, 3, 43}).edges());
  CHECK(gen_unit_disk({300, 1000, 150, 5}).graph.edges() == gen_unit_disk({300, 1000, 150, 5}).graph.edges());
  const Graph a = gen_weighted_random({50, 80, WeightScheme::kUniform, 20, 70, 9});
  const Graph b = gen_weighted_random({50, 80, WeightScheme::kUniform, 20, 70, 9});
  CHECK(a.edges() == b.edges());
  CHECK(std::equal(a.weights().begin(), a.weights().end(), b.weights().begin()));
}

TEST_CASE("pinned draws of the generator stream") {
  // Fixed expectations guard the documented PRNG and its platform independence.
  Rng rng(0);
  CHECK(rng.next() == 0x99EC5F36CB75F2B4ULL);
  CHECK(mix_seed(5, 7) == 0x88BF589A5CE00596ULL);
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
}

TEST_CASE("weighted random graphs") {
  SUBCASE("m = n - 1 is a spanning tree") {
    const Graph g = gen_weighted_random({4, 3, WeightScheme::kUniform, 20, 70, 1});
    CHECK(g.num_edges() == 3);
    CHECK(connected(g));
  }
  SUBCASE("uniform weights stay in range") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Graph g = gen_weighted_random({50, 100, WeightScheme::kUniform, 20, 70, s});
      CHECK(g.num_edges() == 100);
      CHECK(connected(g));
      for (double w : g.weights()) {
        CHECK(w >= 20);
        CHECK(w <= 70);
        CHECK(w == std::floor(w));
      }
    }
  }
  SUBCASE("degree-squared weights") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Graph g = gen_weighted_random({30, 200, WeightScheme::kDegreeSquared, 1, 1, s});
      CHECK(g.num_edges() == 200);
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        CHECK(g.weight(v) >= 1);
        CHECK(g.weight(v) <= static_cast<double>(g.degree(v) * g.degree(v)));
      }
    }
  }
  SUBCASE("dense requests use the complement path") {
    const Graph g = gen_weighted_random({20, 185, WeightScheme::kUniform, 20, 70, 2});
    CHECK(g.num_edges() == 185);
  }
  SUBCASE("infeasible edge counts are rejected") {
    CHECK_THROWS_AS(gen_weighted_random({10, 8, WeightScheme::kUniform, 20, 70, 1}), InvalidArgument);
    CHECK_THROWS_AS(gen_weighted_random({10, 46, WeightScheme::kUniform, 20, 70, 1}), InvalidArgument);
    CHECK_THROWS_AS(gen_weighted_random({10, 20, WeightScheme::kUniform, 0.5, 70, 1}), InvalidArgument);
    CHECK_THROWS_AS(gen_weighted_random({10, 20, WeightScheme::kUniform, 80, 70, 1}), InvalidArgument);
  }
}
