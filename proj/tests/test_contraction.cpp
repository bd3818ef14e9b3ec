#include "doctest.h"
#include "egstab/canon.hpp"
#include "egstab/constructions.hpp"
#include "egstab/contraction.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/recognizers.hpp"
#include "egstab/structure.hpp"

using namespace egstab;

namespace {

Graph h13_plus_v() {
  auto h = build_H(13, 9, 4);
  GraphBuilder b(14);
  for (auto e : h.graph.edges()) b.add_edge(e.u, e.v);
  auto bs = to_vector(h.part("B"));
  b.add_edge(13, bs[0]).add_edge(13, bs[1]);
  return b.build();
}

}  // namespace

TEST_CASE("safe partner") {
  for (int v = 0; v < 4; ++v) CHECK(safe_partner(complete_graph(4), v));
  auto c4 = cycle_graph(4);
  auto w = safe_partner(c4, 0);
  REQUIRE(w);
  CHECK(c4.adjacent(0, *w));
  CHECK_THROWS_AS(safe_partner(path_graph(5), 0), ParameterError);
  CHECK_THROWS_AS(safe_partner(cycle_graph(3), 0), ParameterError);
}

TEST_CASE("every vertex of a small 2-connected graph has a safe partner, inside W(v) when possible") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& g : enumerate_2connected(n)) {
      for (int v = 0; v < n; ++v) {
        auto w = safe_partner(g, v);
        REQUIRE(w);
        VertexSet ws = w_set(g, v);
        if (ws) CHECK(contains(ws, *w));
        CHECK(is_2_connected(contract_edge(g, EdgeRef::of(v, *w)).graph));
      }
    }
  }
}

TEST_CASE("guarded contraction step") {
  CHECK(guarded_contraction_step(complete_graph(4)).graph == complete_graph(3));
  auto s = guarded_contraction_step(cycle_graph(5));
  CHECK(isomorphic(s.graph, cycle_graph(4)));
  CHECK(s.edge == EdgeRef{0, 1});
  CHECK_THROWS_AS(guarded_contraction_step(cycle_graph(3)), ParameterError);
}

TEST_CASE("guarded contraction keeps low degrees unless the source is a clique") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& gp : enumerate_2connected(n)) {
      for (auto e : guarded_candidates(gp)) {
        Graph g = contract_edge(gp, e).graph;
        for (int h = 2; h <= 3; ++h) {
          int low = 0;
          for (int v = 0; v < g.order(); ++v) low += g.degree(v) <= h;
          if (low >= h) CHECK((gp == complete_graph(h + 2) || gp.min_degree() <= h));
        }
      }
    }
  }
}

TEST_CASE("consecutive vertices of a longest cycle never separate") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& g : enumerate_2connected(n)) {
      int c = circumference(g);
      for (auto e : g.edges()) {
        if (separates(g, bit(e.u) | bit(e.v))) CHECK(longest_cycle_through_edge(g, e) < c);
      }
    }
  }
}

TEST_CASE("basic procedure stops at once when n = k") {
  auto tr = basic_procedure(build_H(9, 9, 4).graph, 9);
  REQUIRE(tr.steps.size() == 1);
  CHECK(tr.steps[0].rule == Rule::R1);
  CHECK(tr.final_graph.order() == 9);
}

TEST_CASE("basic procedure on H(14,9,4) stops by R4 unchanged") {
  auto h = build_H(14, 9, 4).graph;
  auto tr = basic_procedure(h, 9);
  REQUIRE(tr.steps.size() == 1);
  CHECK(tr.steps[0].rule == Rule::R4);
  CHECK(tr.final_graph == h);
  CHECK(tr.in_hypotheses);
  auto rep = audit_trace(tr);
  CHECK(rep.ok());
}

TEST_CASE("basic procedure on H(13,9,4) plus a degree-2 vertex") {
  auto g = h13_plus_v();
  auto tr = basic_procedure(g, 9);
  REQUIRE(tr.steps.size() >= 2);
  CHECK(tr.steps[0].rule == Rule::R2);
  CHECK(tr.steps[0].T == 0);
  CHECK((tr.steps[0].edge.u == 13 || tr.steps[0].edge.v == 13));
  CHECK(tr.final_graph.order() == 13);
  // c = 10 here, so the run is outside the hypotheses.
  CHECK_FALSE(tr.in_hypotheses);
  CHECK(replay(tr) == tr.final_graph);
}

TEST_CASE("basic procedure is deterministic") {
  auto g = h13_plus_v();
  auto a = basic_procedure(g, 9);
  auto b = basic_procedure(g, 9);
  REQUIRE(a.steps.size() == b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].edge == b.steps[i].edge);
    CHECK(a.steps[i].rule == b.steps[i].rule);
  }
}

TEST_CASE("audit flags a forged cut-creating contraction") {
  // Contracting the chord of C_10 pinches it into two cycles at one vertex.
  auto g = GraphBuilder(cycle_graph(10)).add_edge(0, 5).build();
  ProcedureTrace tr;
  tr.k = 9;
  tr.t = 4;
  tr.initial = g;
  ProcedureStep s;
  s.rule = Rule::R2;
  s.edge = {0, 5};
  s.n_before = 10;
  s.e_before = 11;
  tr.steps.push_back(s);
  tr.final_graph = contract_edge(g, {0, 5}).graph;
  auto rep = audit_trace(tr);
  bool flagged = false;
  for (const auto& e : rep.entries)
    if (e.check == "2-connected after step" && !e.passed) flagged = true;
  CHECK(flagged);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("edge bound drops by t-1 per vertex") {
  CHECK(h_value(14, 9, 3) - h_value(13, 9, 3) == 3);
  CHECK(h_value(14, 9, 3) == 39);
}

TEST_CASE("random dense inputs produce clean traces") {
  // Subgraphs of H(n,9,4) with a few edges removed and e > h(n,9,3).
  int runs = 0;
  for (int n = 12; n <= 14; ++n) {
    auto h = build_H(n, 9, 4).graph;
    auto edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); i += 7) {
      auto g = GraphBuilder(h).remove_edge(edges[i].u, edges[i].v).build();
      if (!is_2_connected(g) || g.size() <= h_value(n, 9, 3)) continue;
      auto tr = basic_procedure(g, 9);
      auto rep = audit_trace(tr);
      CHECK(rep.ok());
      ++runs;
    }
  }
  CHECK(runs > 10);
}

TEST_CASE("vertex splits contract back") {
  auto f = complete_bipartite(2, 3);
  for (int u = 0; u < 5; ++u) {
    for (const auto& fp : vertex_splits(f, u)) {
      CHECK(contract_edge(fp, EdgeRef::of(u, 5)).graph == f);
    }
  }
  CHECK(vertex_splits(cycle_graph(4), 0).size() == 4);
}

TEST_CASE("splits of F0(4) keep an F0 member") {
  auto m = build_F_member({Family::F0, 4, {}, 0, {}, {}});
  auto rep = split_preservation_check(m, 9);
  CHECK(rep.supergraphs > 0);
  CHECK(rep.qualifying > 0);
  CHECK(rep.violations.empty());
}

TEST_CASE("splits of F4 keep a family member") {
  auto m = build_F_member({Family::F4, 4, {}, 0, {}, {}});
  auto rep = split_preservation_check(m, 10, {1, false, -1});
  CHECK(rep.violations.empty());
  CHECK_THROWS_AS(split_preservation_check(m, 12), ParameterError);
}

TEST_CASE("book of triangles on a shared edge triggers R3") {
  // u = 0, v = 1 and four K3 pages joined to both; every edge lies in t-1 = 3 triangles.
  GraphBuilder b(14);
  b.add_edge(0, 1);
  for (int p = 0; p < 4; ++p) {
    const int x = 2 + 3 * p;
    for (int i = x; i < x + 3; ++i) {
      b.add_edge(0, i).add_edge(1, i);
      for (int j = i + 1; j < x + 3; ++j) b.add_edge(i, j);
    }
  }
  auto g = b.build();
  REQUIRE(is_2_connected(g));
  auto tr = basic_procedure(g, 9);
  REQUIRE_FALSE(tr.steps.empty());
  CHECK(tr.steps[0].rule == Rule::R3);
  CHECK(tr.steps[0].n_after == 11);
  for (std::size_t i = 1; i < tr.steps.size(); ++i) CHECK(tr.steps[i].rule != Rule::R2);
  // Below the edge bound, so only the structural checks are meaningful.
  CHECK_FALSE(tr.in_hypotheses);
  auto audit = audit_trace(tr);
  for (const auto& e : audit.entries)
    if (e.check.find("R3") != std::string::npos || e.check.find("after R3") != std::string::npos) CHECK(e.passed);
  CHECK(replay(tr) == tr.final_graph);
}
