#include <algorithm>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "egstab/canon.hpp"
#include "egstab/constructions.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/graph6.hpp"
#include "egstab/harness.hpp"
#include "egstab/structure.hpp"

using namespace egstab;

namespace {

std::vector<Graph> two_connected(int n) {
  GraphSource src;
  src.n = n;
  return load_graphs(src, GraphFilter::TwoConnected);
}

std::vector<Graph> connected(int n) {
  GraphSource src;
  src.n = n;
  return load_graphs(src, GraphFilter::Connected);
}

std::int64_t outcome(const VerificationReport& r, const std::string& key) {
  auto it = r.outcomes.find(key);
  return it == r.outcomes.end() ? 0 : it->second;
}

// Deliberately false claim: "every 2-connected graph is hamiltonian".
VerificationReport forged_sweep(std::span<const Graph> graphs, int jobs) {
  auto rep = run_chunked(graphs.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    if (is_hamiltonian(graphs[i])) return r.record("hamiltonian");
    r.fail(to_graph6(graphs[i]), "no spanning cycle");
  });
  rep.theorem = "negative-control";
  rep.finalize();
  return rep;
}

}  // namespace

TEST_CASE("enumeration counts of 2-connected graphs") {
  CHECK(two_connected(3).size() == 1);
  CHECK(two_connected(4).size() == 3);
  CHECK(two_connected(5).size() == 10);
  CHECK(two_connected(6).size() == 56);
}

TEST_CASE("2-connected enumeration at n = 4, 5 matches the brute-force classes") {
  for (int n : {4, 5}) {
    std::vector<Graph> brute;
    for (const auto& g : brute_force_classes(n))
      if (is_2_connected(g)) brute.push_back(canonical_form(g));
    auto ours = two_connected(n);
    for (auto& g : ours) g = canonical_form(g);
    std::sort(brute.begin(), brute.end());
    std::sort(ours.begin(), ours.end());
    CHECK(brute == ours);
  }
}

TEST_CASE("enumeration is capped") {
  GraphSource src;
  src.n = 11;
  CHECK_THROWS_AS(load_graphs(src, GraphFilter::All), ParameterError);
}

TEST_CASE("graph6 reference encodings") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(cycle_graph(4)) == "Cl");
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK(from_graph6("Cl") == cycle_graph(4));
}

TEST_CASE("graph6 file source") {
  auto path = std::filesystem::temp_directory_path() / "egstab_harness_source.g6";
  write_graph6_file(path.string(), {complete_graph(4), path_graph(4), cycle_graph(5)});
  GraphSource src;
  src.kind = GraphSource::Kind::Graph6File;
  src.path = path.string();
  CHECK(load_graphs(src, GraphFilter::All).size() == 3);
  CHECK(load_graphs(src, GraphFilter::TwoConnected).size() == 2);
  std::filesystem::remove(path);
  CHECK_THROWS(load_graphs(src, GraphFilter::All));
}

TEST_CASE("random source is reproducible") {
  GraphSource src;
  src.kind = GraphSource::Kind::Random;
  src.n = 9;
  src.samples = 50;
  src.seed = 7;
  auto a = load_graphs(src, GraphFilter::All);
  auto b = load_graphs(src, GraphFilter::All);
  CHECK(a.size() == 50);
  CHECK(a == b);
}

TEST_CASE("empty sweep") {
  std::vector<Graph> none;
  auto r = stability_sweep(none, 6, StabilityMode::T3Small);
  CHECK(r.checked == 0);
  CHECK(r.violations.empty());
  CHECK(r.consistent());
  auto back = report_from_json(report_to_json(r));
  CHECK(back.checked == 0);
}

TEST_CASE("stability at n = 7, k = 6 has no violations") {
  auto gs = two_connected(7);
  auto r = stability_sweep(gs, 6, StabilityMode::T3Small);
  CHECK(r.checked == static_cast<std::int64_t>(gs.size()));
  CHECK(r.ok());
  CHECK(r.consistent());
  std::int64_t classified = 0;
  for (const auto& [k, v] : r.outcomes)
    if (k.starts_with("class:")) {
      classified += v;
      CHECK((k.starts_with("class:G1(") || k.starts_with("class:G2(")));
    }
  CHECK(classified > 0);
}

TEST_CASE("k = 4 has no qualifying graphs") {
  for (int n = 4; n <= 7; ++n) {
    auto gs = two_connected(n);
    auto r = stability_sweep(gs, 4, StabilityMode::T3Small);
    CHECK(r.ok());
    CHECK(outcome(r, "long-cycle") == r.checked);
  }
}

TEST_CASE("stability at n = 8, k = 7 has no violations") {
  auto gs = two_connected(8);
  auto r = stability_sweep(gs, 7, StabilityMode::T3Small);
  CHECK(r.ok());
  CHECK(r.consistent());
}

TEST_CASE("Kopylov maximum on small orders") {
  auto check = [](int n, int k, std::int64_t expected) {
    auto gs = two_connected(n);
    auto r = kopylov_sweep(gs, k);
    CHECK(r.ok());
    CHECK(r.consistent());
    const std::string want = "n=" + std::to_string(n) + ": max e = " + std::to_string(expected);
    CHECK(std::any_of(r.findings.begin(), r.findings.end(), [&](const std::string& f) { return f.starts_with(want); }));
  };
  check(7, 5, 11);
  check(8, 6, 14);
  CHECK(h_value(7, 5, 2) == 11);
  CHECK(h_value(8, 6, 2) == 14);
}

TEST_CASE("stability and Kopylov agree: nothing classified above the maximum") {
  for (int k = 5; k <= 7; ++k) {
    auto gs = two_connected(7);
    const int t = t_of(k);
    const auto cap = std::max(h_value(7, k, 2), h_value(7, k, t));
    for (const auto& g : gs) {
      auto [o, diag] = stability_outcome(g, k, StabilityMode::T3Small);
      if (o.starts_with("class:")) CHECK(g.size() <= cap);
    }
  }
}

TEST_CASE("star K_{1,5} is below the path threshold") {
  std::vector<Graph> star{complete_bipartite(1, 5)};
  auto r = path_sweep(star, 4);
  CHECK(r.ok());
  CHECK(star[0].size() <= (4 - 2) * 6 / 2);
}

TEST_CASE("path theorems on connected graphs n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    auto gs = connected(n);
    for (int k = 4; k <= 6; ++k) CHECK(path_sweep(gs, k).ok());
    CHECK(apex_sweep(gs).ok());
  }
}

TEST_CASE("report JSON round trip is byte-identical") {
  auto gs = two_connected(6);
  auto r = stability_sweep(gs, 5, StabilityMode::T3Small);
  r.param("n", 6);
  r.param("k", 5);
  r.findings.push_back("a finding");
  r.fail("Bw", "forged for the round trip");
  const auto text = report_to_json(r);
  CHECK(report_to_json(report_from_json(text)) == text);
  auto back = report_from_json(text);
  CHECK(back.param_value("k") == "5");
  CHECK(back.violations == r.violations);
}

TEST_CASE("negative control is reported with its diagnosis") {
  auto gs = two_connected(5);
  auto r = forged_sweep(gs, 1);
  CHECK_FALSE(r.ok());
  CHECK(r.consistent());
  REQUIRE_FALSE(r.violations.empty());
  const auto json = report_to_json(r);
  CHECK(json.find("no spanning cycle") != std::string::npos);
  CHECK(json.find(r.violations.front().graph6) != std::string::npos);
  // K_{2,3} and K_{2,3} plus the edge inside its 2-side.
  REQUIRE(r.violations.size() == 2);
  auto k23 = canonical_form(complete_bipartite(2, 3));
  CHECK(std::any_of(r.violations.begin(), r.violations.end(),
                    [&](const Violation& v) { return canonical_form(from_graph6(v.graph6)) == k23; }));
  CHECK(reports_to_csv({r}).find("negative-control,,,10,2,exhaustive,") != std::string::npos);
}

TEST_CASE("stored violations re-verify") {
  auto gs = two_connected(6);
  auto r = forged_sweep(gs, 2);
  REQUIRE_FALSE(r.violations.empty());
  for (const auto& v : r.violations) CHECK_FALSE(is_hamiltonian(from_graph6(v.graph6)));
}

TEST_CASE("parallel and serial sweeps produce identical reports") {
  auto gs = two_connected(8);
  for (int k : {6, 7, 8}) {
    auto a = stability_sweep(gs, k, StabilityMode::T3Small, {.jobs = 1});
    auto b = stability_sweep(gs, k, StabilityMode::T3Small, {.jobs = 3});
    a.runtime_ms = b.runtime_ms = 0;
    CHECK(report_to_json(a) == report_to_json(b));
  }
  auto a = forged_sweep(gs, 1);
  auto b = forged_sweep(gs, 4);
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("construction grid members build and carry list labels") {
  auto grid = construction_grid(10, 10, 16);
  CHECK_FALSE(grid.empty());
  for (const auto& m : grid) {
    CHECK(m.member.graph.order() >= 10);
    CHECK(m.label.find("(n,10)") != std::string::npos);
  }
}

TEST_CASE("procedure audit on a small grid") {
  auto r = procedure_grid_audit(9, 12, 2, 3);
  CHECK(r.ok());
  CHECK(r.consistent());
  CHECK(r.checked > 0);
}

TEST_CASE("mode names round trip") {
  for (auto m : {StabilityMode::T3, StabilityMode::Main, StabilityMode::T3Small, StabilityMode::ThreeConnected})
    CHECK(parse_mode(mode_name(m)) == m);
  CHECK_FALSE(parse_mode("theorem-x"));
}
