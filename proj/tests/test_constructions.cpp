#include "doctest.h"
#include "egstab/constructions.hpp"
#include "egstab/structure.hpp"

using namespace egstab;

TEST_CASE("h and ell values") {
  CHECK(h_value(7, 7, 2) == 14);
  CHECK(h_value(8, 8, 2) == 19);
  CHECK(h_value(14, 9, 4) == 46);
  CHECK(ell_value(5, 2) == 7);
  CHECK(ell_value(10, 3) == 31);
  CHECK(ell_value(12, 2) == 49);
  CHECK_THROWS_AS(h_value(5, 7, 2), ParameterError);
  CHECK_THROWS_AS(h_value(9, 7, 4), ParameterError);
}

TEST_CASE("h equals the edge count of H on the full grid") {
  for (int k = 3; k <= 12; ++k)
    for (int a = 1; 2 * a < k; ++a)
      for (int n = k; n <= 40; ++n) CHECK(h_value(n, k, a) == build_H(n, k, a).graph.size());
}

TEST_CASE("h identities between consecutive k and t") {
  for (int t = 2; t <= 6; ++t) {
    for (int n = std::max(3 * t, 2 * t + 2); n <= 40; ++n) {
      CHECK(h_value(n, 2 * t + 2, t) == h_value(n, 2 * t + 1, t) + 1);
      CHECK(h_value(n, 2 * t + 2, t - 1) == h_value(n, 2 * t + 1, t - 1) + 3);
      CHECK(h_value(n, 2 * t + 1, t) - h_value(n, 2 * t + 1, t - 1) == n - t - 3);
      CHECK(h_value(n, 2 * t + 2, t) - h_value(n, 2 * t + 2, t - 1) == n - t - 5);
    }
  }
}

TEST_CASE("ell(n,2) is the larger of the two H(n,n,.) counts") {
  for (int n = 5; n <= 20; ++n) {
    auto a = build_H(n, n, 2).graph.size();
    auto b = build_H(n, n, (n - 1) / 2).graph.size();
    CHECK(ell_value(n, 2) == std::max(a, b));
  }
}

TEST_CASE("build_H shapes") {
  auto h = build_H(10, 8, 3);
  CHECK(h.graph.order() == 10);
  CHECK(h.graph.size() == 25);
  CHECK(build_H(5, 5, 2).graph.size() == 7);
  auto g = build_H(14, 9, 4);
  CHECK(g.graph.min_degree() == 4);
  for_each_vertex(g.part("B"), [&](int v) { CHECK(g.graph.degree(v) == 4); });
  CHECK(count(g.part("A")) == 4);
  CHECK(count(g.part("C")) == 1);
}

TEST_CASE("class members") {
  ClassSpec g2{Family::G2, 9, 8, -1, 3, 3, {}};
  auto m = build_class_member(g2);
  CHECK(m.graph.size() == 18);
  CHECK(circumference(m.graph) < 8);

  ClassSpec g8{Family::G8, 12, 8, -1, 0, 0, {{3, 0, 1, 0}, {4, 0, 1, 1}}};
  auto m8 = build_class_member(g8);
  CHECK(m8.graph.order() == 12);
  CHECK(circumference(m8.graph) < 8);

  ClassSpec g1{Family::G1, 12, 9, -1, 0, 0, {}};
  CHECK(build_class_member(g1).graph == build_H(12, 9, 4).graph);

  ClassSpec bad{Family::G7, 8, 8, -1, 0, 0, {{1, 0, 1, 0}, {2, 2, 3, 2}}};
  CHECK_THROWS_AS(build_class_member(bad), ParameterError);
  ClassSpec g4_wrong_k{Family::G4, 9, 8, -1, 0, 0, {{6, 0, 1, 0}}};
  CHECK_THROWS_AS(build_class_member(g4_wrong_k), ParameterError);
}

TEST_CASE("small class members are 2-connected with short cycles") {
  std::vector<ClassSpec> specs = {
      {Family::G2, 10, 8, -1, 3, 4, {}},
      {Family::G2, 12, 10, -1, 4, 4, {}},
      {Family::G3, 10, 8, -1, 2, 0, {{2, 0, 1, 0}, {3, 0, 1, 1}}},
      {Family::G3, 13, 10, -1, 2, 0, {{3, 0, 1, 0}, {4, 0, 1, 0}}},
      {Family::G4, 12, 10, -1, 0, 0, {{1, 0, 1, 0}, {2, 0, 1, 0}, {3, 0, 1, 2}, {3, 0, 1, 1}}},
      {Family::G5, 10, 8, -1, 0, 0, {{2, 0, 1, 0}, {2, 0, 2, 0}, {3, 0, 1, 1}}},
      {Family::G6, 10, 8, -1, 0, 0, {{2, 0, 1, 0}, {1, 0, 2, 0}, {1, 0, 3, 0}, {2, 0, 1, 0}}},
      {Family::G7, 11, 8, -1, 0, 0, {{2, 0, 1, 0}, {3, 0, 1, 0}, {1, 2, 3, 0}, {1, 2, 3, 0}}},
      {Family::G8, 14, 8, -1, 0, 0, {{3, 0, 1, 0}, {3, 0, 1, 1}, {3, 0, 1, 0}}},
  };
  for (const auto& s : specs) {
    CAPTURE(family_name(s.cls));
    auto m = build_class_member(s);
    CHECK(m.graph.order() == s.n);
    CHECK(is_2_connected(m.graph));
    CHECK(circumference(m.graph) < s.k);
  }
}

TEST_CASE("F family members") {
  auto f0 = build_F_member({Family::F0, 4, {}, 0, {}, {}});
  CHECK(f0.graph.order() == 9);
  CHECK(f0.graph.size() == 20);
  auto f4 = build_F_member({Family::F4, 4, {}, 0, {}, {}});
  CHECK(f4.graph.order() == 9);
  CHECK(f4.graph.size() == 21);
  CHECK(circumference(f4.graph) == 9);
  auto f3 = build_F_member({Family::F3, 4, {}, 0, {}, {}});
  CHECK(f3.graph.order() == 10);
  CHECK(f3.graph.size() == 21);
  auto f1 = build_F_member({Family::F1, 5, {{0, 0}}, 0, {}, {}});
  CHECK(f1.graph.size() == 34);
  CHECK_THROWS_AS(build_F_member({Family::F0, 4, {{0, 0}, {1, 1}}, 0, {}, {}}), ParameterError);
}

TEST_CASE("G6 needs every isolated vertex on a1") {
  // One J3-bridge on {a1,a2} plus isolated vertices; moving one of them to {a3,a4}
  // (allowed if only some isolated vertex must see a1) closes an 8-cycle.
  ClassSpec s{Family::G6, 9, 8, -1, 0, 0, {{2, 0, 1, 0}, {1, 0, 2, 0}, {1, 0, 2, 0}, {1, 0, 2, 0}}};
  auto m = build_class_member(s);
  CHECK(circumference(m.graph) < 8);
  GraphBuilder b(m.graph);
  for (int a = 0; a < 4; ++a) b.remove_edge(a, 8);
  b.add_edge(2, 8).add_edge(3, 8);
  CHECK(circumference(b.build()) == 8);
  s.components.back() = {1, 2, 3, 0};
  CHECK_THROWS_AS(build_class_member(s), ParameterError);
}
