#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "egstab/canon.hpp"
#include "egstab/constructions.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/graph.hpp"
#include "egstab/graph6.hpp"

using namespace egstab;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

}  // namespace

TEST_CASE("make_graph builds the basic shapes") {
  auto k3 = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(k3.size() == 3);
  CHECK(k3 == complete_graph(3));
  CHECK(make_graph(4, {}).size() == 0);
  auto c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK(c5 == cycle_graph(5));
}

TEST_CASE("make_graph rejects loops and bad labels") {
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(make_graph(64, {}), GraphError);
}

TEST_CASE("contract_edge merges into the smaller label") {
  CHECK(contract_edge(cycle_graph(4), {0, 1}).graph == cycle_graph(3));
  CHECK(contract_edge(complete_graph(4), {1, 3}).graph == complete_graph(3));
  auto p = contract_edge(path_graph(4), {1, 2});
  CHECK(p.graph == path_graph(3));
  CHECK(p.merged == 1);
  CHECK(p.relabel == std::vector<int>{0, 1, 1, 2});
  CHECK_THROWS_AS(contract_edge(path_graph(4), {0, 2}), GraphError);
}

TEST_CASE("induced and remove_vertices") {
  CHECK(induced(complete_graph(5), 0b10101).graph == complete_graph(3));
  auto p = remove_vertices(cycle_graph(6), bit(2));
  CHECK(isomorphic(p.graph, path_graph(5)));
  CHECK(p.original == std::vector<int>{0, 1, 3, 4, 5});
  auto h = build_H(10, 8, 3);
  CHECK(induced(h.graph, h.part("A") | h.part("C")).graph == complete_graph(5));
}

TEST_CASE("join and its edge count") {
  auto w4 = join(complete_graph(1), cycle_graph(4));
  CHECK(w4.size() == 8);
  CHECK(join(empty_graph(3), empty_graph(3)) == complete_bipartite(3, 3));
  CHECK(join(empty_graph(4), empty_graph(10)).size() == 40);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto a = random_graph(rng, 1 + i % 6, 0.5);
    auto b = random_graph(rng, 1 + (i * 7) % 5, 0.4);
    CHECK(join(a, b).size() == a.size() + b.size() + a.order() * b.order());
  }
}

TEST_CASE("triangle counts") {
  CHECK(triangles_on_edge(complete_graph(4), {0, 1}) == 2);
  CHECK(triangles_on_edge(cycle_graph(5), {0, 1}) == 0);
  auto h = build_H(10, 8, 3);
  CHECK(triangles_on_edge(h.graph, {h.vertex("a1"), h.vertex("a2")}) == 8);
  CHECK(min_triangle_count(complete_graph(4)) == 2);
  CHECK(min_triangle_count(cycle_graph(5)) == 0);
  CHECK(min_triangle_count(build_H(14, 9, 4).graph) == 3);
}

TEST_CASE("contraction lowers min degree and min triangle count by at most one") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (auto e : g.edges()) {
        auto h = contract_edge(g, e).graph;
        CHECK(h.min_degree() >= g.min_degree() - 1);
        if (h.size() > 0) CHECK(min_triangle_count(h) >= min_triangle_count(g) - 1);
      }
    }
  }
}

TEST_CASE("contraction commutes with relabeling") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    int n = 3 + i % 8;
    auto g = random_graph(rng, n, 0.5);
    auto edges = g.edges();
    if (edges.empty()) continue;
    auto e = edges[i % edges.size()];
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto pg = permute(g, perm);
    auto a = contract_edge(g, e).graph;
    auto b = contract_edge(pg, EdgeRef::of(perm[e.u], perm[e.v])).graph;
    CHECK(isomorphic(a, b));
  }
}

TEST_CASE("graph6 round trip") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(cycle_graph(4)) == "Cl");
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK_THROWS(from_graph6("B"));
  CHECK_THROWS(from_graph6("Bx"));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto g = random_graph(rng, 1 + i % 40, 0.3);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  std::stringstream s;
  write_graph6(s, {cycle_graph(5), complete_graph(4)});
  auto back = read_graph6(s);
  REQUIRE(back.size() == 2);
  CHECK(back[1] == complete_graph(4));
}

TEST_CASE("canonical forms identify isomorphic graphs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + i % 12;
    auto g = random_graph(rng, n, 0.45);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(permute(g, perm)));
  }
  CHECK_FALSE(isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK_FALSE(isomorphic(complete_bipartite(3, 3), join(empty_graph(2), empty_graph(4))));
}

TEST_CASE("orderly enumeration matches the brute-force oracle") {
  for (int n = 1; n <= 5; ++n) {
    auto fast = enumerate_graphs(n);
    auto slow = brute_force_classes(n);
    REQUIRE(fast.size() == slow.size());
    std::vector<Graph> a, b;
    for (const auto& g : fast) a.push_back(canonical_form(g));
    for (const auto& g : slow) b.push_back(canonical_form(g));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("enumeration counts") {
  const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_graphs(n).size() == all[n]);
  const std::size_t biconnected[] = {0, 0, 0, 1, 3, 10, 56, 468, 7123};
  for (int n = 3; n <= 8; ++n) CHECK(enumerate_2connected(n).size() == biconnected[n]);
}

TEST_CASE("pack_small round trip") {
  for (const auto& g : enumerate_graphs(6)) CHECK(unpack_small(6, pack_small(g)) == g);
}
