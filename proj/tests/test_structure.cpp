#include <random>

#include "doctest.h"
#include "egstab/constructions.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/structure.hpp"

using namespace egstab;

namespace {

// Plain exhaustive DFS over simple cycles, used as an independent oracle.
int naive_circumference(const Graph& g) {
  int best = 0;
  const int n = g.order();
  auto dfs = [&](auto&& self, int s, int v, VertexSet seen, int len) -> void {
    for (int w = 0; w < n; ++w) {
      if (!g.adjacent(v, w)) continue;
      if (w == s && len >= 3) best = std::max(best, len);
      if (w > s && !contains(seen, w)) self(self, s, w, seen | bit(w), len + 1);
    }
  };
  for (int s = 0; s < n; ++s) dfs(dfs, s, s, bit(s), 1);
  return best;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

}  // namespace

TEST_CASE("connectivity predicates") {
  CHECK(is_2_connected(cycle_graph(4)));
  CHECK_FALSE(is_3_connected(cycle_graph(4)));
  CHECK(cut_vertices(path_graph(4)) == (bit(1) | bit(2)));
  CHECK(is_3_connected(build_H(10, 8, 3).graph));
  CHECK_FALSE(is_2_connected(path_graph(3)));
  CHECK(separating_pairs(cycle_graph(4)).size() == 2);
  CHECK(separating_pairs(complete_graph(4)).empty());
}

TEST_CASE("circumference values") {
  for (int n = 3; n <= 12; ++n) CHECK(circumference(cycle_graph(n)) == n);
  CHECK(circumference(complete_bipartite(2, 3)) == 4);
  CHECK(circumference(build_H(10, 8, 3).graph) == 7);
  CHECK(circumference(path_graph(6)) == 0);
}

TEST_CASE("circumference agrees with the naive oracle and both solvers agree") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    auto g = random_graph(rng, 3 + i % 9, 0.25 + 0.05 * (i % 8));
    int c = circumference(g);
    CHECK(c == naive_circumference(g));
    CHECK(circumference(g, Solver::BranchAndBound) == c);
    auto lc = longest_cycle(g);
    CHECK(static_cast<int>(lc.cycle.size()) == c);
    if (c > 0) CHECK(is_valid_cycle(g, lc.cycle));
  }
}

TEST_CASE("longest xy paths in K_{4,5}") {
  auto g = complete_bipartite(4, 5);
  CHECK(longest_xy_path(g, 0, 1).length == 6);
  CHECK(longest_xy_path(g, 0, 4).length == 7);
  CHECK(longest_xy_path(g, 4, 5).length == 8);
  auto p = longest_xy_path(g, 4, 5);
  CHECK(is_valid_path(g, p.witness));
  CHECK(longest_xy_path(g, 4, 5, Solver::BranchAndBound).length == 8);
}

TEST_CASE("hamiltonicity") {
  CHECK(is_hamiltonian(complete_graph(4)));
  CHECK_FALSE(is_hamiltonian(complete_bipartite(2, 3)));
  CHECK_FALSE(is_hamiltonian(build_H(9, 9, 4).graph));
  auto h = hamiltonian_cycle(cycle_graph(7));
  REQUIRE(h);
  CHECK(is_valid_cycle(cycle_graph(7), *h));
}

TEST_CASE("closure") {
  CHECK(k_closure(cycle_graph(5), 5) == cycle_graph(5));
  GraphBuilder b(complete_graph(4));
  b.remove_edge(0, 1);
  CHECK(k_closure(b.build(), 4) == complete_graph(4));
  CHECK(k_closure(complete_bipartite(3, 3), 6) == complete_graph(6));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    auto g = random_graph(rng, 4 + i % 7, 0.4);
    int n = g.order();
    auto cl = k_closure(g, n);
    CHECK(k_closure(cl, n) == cl);
    CHECK(k_closure(g, n + 1).size() <= cl.size());
  }
}

TEST_CASE("chvatal index") {
  CHECK(chvatal_index(complete_bipartite(2, 3)) == 2);
  CHECK(chvatal_index(build_H(9, 9, 4).graph) == 4);
  CHECK(chvatal_index(build_H(7, 7, 2).graph) == 2);
  CHECK_THROWS_AS(chvatal_index(complete_graph(5)), GraphError);
}

TEST_CASE("Dirac and Bondy-Chvatal hold on all 2-connected graphs up to 8 vertices") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& g : enumerate_2connected(n)) {
      int c = circumference(g);
      CHECK(c >= std::min(n, 2 * g.min_degree()));
      if (k_closure(g, n) == complete_graph(n)) CHECK(c == n);
    }
  }
}

TEST_CASE("path profile and edge-constrained cycles") {
  auto g = complete_bipartite(3, 3);
  auto prof = path_length_profile(g, 0, g.vertices());
  CHECK(prof[1] == ((1U << 2) | (1U << 4)));
  CHECK(prof[3] == ((1U << 1) | (1U << 3) | (1U << 5)));
  CHECK(longest_cycle_through_edge(g, {0, 3}) == 6);
  CHECK(cycle_through_path_of_length(cycle_graph(5), 0, 1, 2, 5));
  CHECK_FALSE(cycle_through_path_of_length(cycle_graph(5), 0, 1, 2, 4));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    auto r = random_graph(rng, 4 + i % 7, 0.5);
    int c = circumference(r);
    for (auto e : r.edges()) CHECK(longest_cycle_through_edge(r, e) <= c);
  }
}

TEST_CASE("deadlines abort long searches") {
  Deadline past = Clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(circumference(complete_bipartite(20, 21), Solver::BranchAndBound, past), DeadlineExceeded);
}
