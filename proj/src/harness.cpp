#include "egstab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

#include "egstab/canon.hpp"
#include "egstab/contraction.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/graph6.hpp"
#include "egstab/structure.hpp"

namespace egstab {

namespace {

using Ms = std::chrono::milliseconds;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<Ms>(Clock::now() - start).count();
}

bool passes(const Graph& g, GraphFilter f) {
  switch (f) {
    case GraphFilter::All: return true;
    case GraphFilter::Connected: return is_connected(g);
    case GraphFilter::TwoConnected: return is_2_connected(g);
  }
  return false;
}

const std::vector<Graph>& cached_enumeration(int n, GraphFilter f) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Graph>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(n, static_cast<int>(f));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Graph> out;
  switch (f) {
    case GraphFilter::All: out = enumerate_graphs(n); break;
    case GraphFilter::Connected: out = enumerate_connected(n); break;
    case GraphFilter::TwoConnected: out = n >= 3 ? enumerate_2connected(n) : std::vector<Graph>{}; break;
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::string label_of(Family f, int k) { return family_name(f) + "(n," + std::to_string(k) + ")"; }

void try_add(std::vector<GridMember>& out, const ClassSpec& spec, int list_k) {
  try {
    auto m = build_class_member(spec);
    std::string label = spec.cls == Family::H ? "H(n,7,3)" : label_of(spec.cls, spec.k);
    out.push_back({std::move(m), label, list_k});
  } catch (const ParameterError&) {
  }
}

// Splits `total` vertices into components following `sizes` cyclically.
std::vector<int> cut_sizes(int total, const std::vector<int>& sizes) {
  std::vector<int> out;
  for (std::size_t i = 0; total > 0; ++i) {
    int s = std::min(total, sizes[i % sizes.size()]);
    out.push_back(s);
    total -= s;
  }
  return out;
}

void add_members(std::vector<GridMember>& out, int n, int kk, int t, int list_k, bool with_g2, bool with_g3) {
  try_add(out, {Family::G1, n, kk, t, 0, 0, {}}, list_k);
  if (!with_g2) return;
  std::set<int> bs;
  for (int b : {1, 2, (n - t) / 2, n - t - 3, n - t - 2, n - t - 1, n - t})
    if (b >= 1 && b <= n - t) bs.insert(b);
  for (int b : bs) try_add(out, {Family::G2, n, kk, t, b, n - t - b, {}}, list_k);
  if (!with_g3) return;
  std::set<int> ms;
  for (int m : {4, 5, 6, n - t - 2, n - t - 1, n - t})
    if (m >= 4 && m <= n - t) ms.insert(m);
  for (int m : ms) {
    const int b = n - t - m;
    std::vector<std::vector<ComponentShape>> shapes;
    shapes.push_back({{m - 2, 0, 1, 0}, {2, 0, 1, 1}});
    std::vector<ComponentShape> pairs;
    int anchor = 0;
    for (int s : cut_sizes(m, {2, 3})) {
      pairs.push_back({s, 0, 1, anchor});
      anchor ^= 1;
    }
    if (pairs.back().size >= 2) shapes.push_back(pairs);
    if (m % 2 == 0) shapes.push_back(std::vector<ComponentShape>(m / 2, {2, 0, 1, 0}));
    for (const auto& comps : shapes) try_add(out, {Family::G3, n, kk, t, b, 0, comps}, list_k);
  }
}

}  // namespace

std::vector<Graph> load_graphs(const GraphSource& src, GraphFilter filter) {
  std::vector<Graph> out;
  switch (src.kind) {
    case GraphSource::Kind::Enumeration:
      if (src.n < 1 || src.n > 10) throw ParameterError("built-in enumeration needs 1 <= n <= 10");
      return cached_enumeration(src.n, filter);
    case GraphSource::Kind::Graph6File:
      for (auto& g : read_graph6_file(src.path))
        if (passes(g, filter)) out.push_back(std::move(g));
      return out;
    case GraphSource::Kind::ConstructionGrid: {
      int hi = src.n_max < 0 ? src.n : src.n_max;
      for (auto& m : construction_grid(src.k, src.n, hi))
        if (passes(m.member.graph, filter)) out.push_back(m.member.graph);
      return out;
    }
    case GraphSource::Kind::Random: {
      if (src.n < 1 || src.n > kMaxVertices) throw ParameterError("random order out of range");
      if (src.density < 0 || src.density > 1) throw ParameterError("density must lie in [0,1]");
      std::mt19937_64 rng(src.seed);
      std::bernoulli_distribution coin(src.density);
      const std::int64_t attempts = static_cast<std::int64_t>(src.samples) * 1000;
      for (std::int64_t a = 0; a < attempts && static_cast<int>(out.size()) < src.samples; ++a) {
        GraphBuilder b(src.n);
        for (int u = 0; u < src.n; ++u)
          for (int v = u + 1; v < src.n; ++v)
            if (coin(rng)) b.add_edge(u, v);
        auto g = b.build();
        if (passes(g, filter)) out.push_back(std::move(g));
      }
      return out;
    }
  }
  return out;
}

std::string coverage_mode(const GraphSource& src) {
  switch (src.kind) {
    case GraphSource::Kind::Enumeration: return "exhaustive";
    case GraphSource::Kind::Graph6File: return "file";
    case GraphSource::Kind::ConstructionGrid: return "property-based";
    case GraphSource::Kind::Random: return "random";
  }
  return "unknown";
}

std::string describe(const GraphSource& src) {
  switch (src.kind) {
    case GraphSource::Kind::Enumeration: return "enumeration(n=" + std::to_string(src.n) + ")";
    case GraphSource::Kind::Graph6File: return "graph6(" + src.path + ")";
    case GraphSource::Kind::ConstructionGrid:
      return "grid(k=" + std::to_string(src.k) + ",n=" + std::to_string(src.n) + ".." +
             std::to_string(src.n_max < 0 ? src.n : src.n_max) + ")";
    case GraphSource::Kind::Random:
      return "random(seed=" + std::to_string(src.seed) + ",n=" + std::to_string(src.n) +
             ",samples=" + std::to_string(src.samples) + ")";
  }
  return "unknown";
}

std::vector<GridMember> construction_grid(int k, int n_min, int n_max) {
  std::vector<GridMember> out;
  if (k < 5) return out;
  for (int n = std::max(n_min, k); n <= n_max; ++n) {
    if (k == 7) {
      try_add(out, {Family::H, n, 7, 3, 0, 0, {}}, 7);
      add_members(out, n, 6, 2, 7, true, true);
      continue;
    }
    const int t = t_of(k);
    add_members(out, n, k, t, k, k % 2 == 0, k % 2 == 0 && k >= 8);
    if (k == 10) {
      for (const std::vector<int>& pattern : {std::vector<int>{1, 2, 3}, std::vector<int>{2}}) {
        std::vector<ComponentShape> comps;
        int anchor = 0;
        for (int s : cut_sizes(n - 3, pattern)) {
          comps.push_back({s, 0, 1, anchor});
          anchor = (anchor + 1) % 3;
        }
        try_add(out, {Family::G4, n, 10, 3, 0, 0, comps}, 10);
      }
    }
    if (k == 8) {
      std::vector<ComponentShape> g5, g6, g7, g8;
      int i = 0;
      for (int s : cut_sizes(n - 3, {2, 1, 3})) g5.push_back({s, 0, 1 + (i++ % 2), 0});
      i = 0;
      for (int s : cut_sizes(n - 4, {2, 1, 3, 1})) {
        g6.push_back(s >= 2 ? ComponentShape{s, 0, 1, i % 2} : ComponentShape{1, 0, 2 + i % 2, 0});
        g7.push_back(s >= 2 ? ComponentShape{s, 0, 1, i % 2} : ComponentShape{1, 2, 3, 2});
        ++i;
      }
      i = 0;
      for (int s : cut_sizes(n - 5, {3, 2, 1})) g8.push_back({s, 0, 1, i++ % 2});
      try_add(out, {Family::G5, n, 8, 3, 0, 0, g5}, 8);
      try_add(out, {Family::G6, n, 8, 3, 0, 0, g6}, 8);
      try_add(out, {Family::G7, n, 8, 3, 0, 0, g7}, 8);
      try_add(out, {Family::G8, n, 8, 3, 0, 0, g8}, 8);
    }
  }
  return out;
}

std::string mode_name(StabilityMode m) {
  switch (m) {
    case StabilityMode::T3: return "theorem-t3";
    case StabilityMode::Main: return "theorem-main";
    case StabilityMode::T3Small: return "theorem-t3small";
    case StabilityMode::ThreeConnected: return "corollary-3con";
  }
  return "unknown";
}

std::optional<StabilityMode> parse_mode(std::string_view name) {
  for (auto m : {StabilityMode::T3, StabilityMode::Main, StabilityMode::T3Small, StabilityMode::ThreeConnected})
    if (mode_name(m) == name) return m;
  return std::nullopt;
}

namespace {

// Conclusion of the 2-connected stability theorem for k in {2t+1, 2t+2}.
std::optional<std::string> cycle_stability_conclusion(const Graph& g, int k) {
  const int t = t_of(k);
  if (k % 2 == 1 && k != 7) {
    if (embeds_in_H(g, k, t)) return "in-H(n,k,t)";
    return std::nullopt;
  }
  if (star_forest_witness(g, t)) return "star-forest";
  return std::nullopt;
}

}  // namespace

std::pair<std::string, std::optional<std::string>> stability_outcome(const Graph& g, int k, StabilityMode mode,
                                                                     const ClassifyOptions& opts) {
  const int n = g.order();
  const int t = t_of(k);
  switch (mode) {
    case StabilityMode::T3:
      if (t < 2 || n < 3 * t) return {"outside-range", std::nullopt};
      break;
    case StabilityMode::Main:
      if (k < 9 || 2 * n < 3 * k) return {"outside-range", std::nullopt};
      break;
    case StabilityMode::T3Small:
      if (k < 4 || k > 8 || n < k) return {"outside-range", std::nullopt};
      break;
    case StabilityMode::ThreeConnected:
      if (k < 11 || 2 * n < 3 * k) return {"outside-range", std::nullopt};
      if (!is_3_connected(g)) return {"not-3-connected", std::nullopt};
      break;
  }
  if (!is_2_connected(g)) return {"not-2-connected", std::nullopt};
  const bool threshold = mode != StabilityMode::T3Small || k >= 7;
  if (threshold && g.size() <= h_value(n, k, t - 1)) return {"below-bound", std::nullopt};
  if (has_cycle_at_least(g, k)) return {"long-cycle", std::nullopt};

  switch (mode) {
    case StabilityMode::T3: {
      if (auto c = cycle_stability_conclusion(g, k)) return {*c, std::nullopt};
      return {"violation", k % 2 == 1 && k != 7 ? "not a subgraph of H(n,k,t)"
                                                 : "no set of at most t vertices leaves a star forest"};
    }
    case StabilityMode::ThreeConnected:
      if (embeds_in_H(g, k, t)) return {"in-H(n,k,t)", std::nullopt};
      return {"violation", "3-connected but not a subgraph of H(n,k,t)"};
    default: {
      ClassifyOptions o = opts;
      o.check_preconditions = false;
      auto v = classify_stability(g, k, o);
      if (v.kind == VerdictKind::ClassMember) {
        if (!verify_witness(g, *v.witness)) return {"violation", "witness for " + v.witness->label + " does not check"};
        return {"class:" + v.witness->label, std::nullopt};
      }
      if (v.kind == VerdictKind::BelowBound) return {"below-bound", std::nullopt};
      return {"violation", "no class of G(n," + std::to_string(k) + ") contains it"};
    }
  }
}

VerificationReport stability_sweep(std::span<const Graph> graphs, int k, StabilityMode mode,
                                   const SweepOptions& opts) {
  auto start = Clock::now();
  auto rep = run_chunked(graphs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    auto [outcome, diag] = stability_outcome(g, k, mode, opts.classify);
    if (diag) {
      r.fail(to_graph6(g), *diag);
      return;
    }
    r.record(outcome);
    // On the overlap of the two ranges, also evaluate the other statement.
    if (mode == StabilityMode::Main && outcome.rfind("class:", 0) == 0 && g.order() >= 3 * t_of(k))
      ++r.stats[cycle_stability_conclusion(g, k) ? "n >= 3t conclusion also holds" : "n >= 3t conclusion fails"];
  });
  rep.theorem = "stability/" + mode_name(mode);
  rep.param("k", k);
  rep.coverage_mode = opts.coverage;
  rep.finalize();
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

VerificationReport kopylov_sweep(std::span<const Graph> graphs, int k, const SweepOptions& opts) {
  auto start = Clock::now();
  const int t = t_of(k);
  std::vector<int> edges(graphs.size(), -1);
  std::map<int, std::pair<Graph, Graph>> extremal;
  for (const auto& g : graphs) {
    int n = g.order();
    if (n >= k && k >= 5 && !extremal.count(n))
      extremal.emplace(n, std::make_pair(canonical_form(build_H(n, k, 2).graph), canonical_form(build_H(n, k, t).graph)));
  }
  auto rep = run_chunked(graphs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    const int n = g.order();
    if (k < 5 || n < k) return r.record("outside-range");
    if (!is_2_connected(g)) return r.record("not-2-connected");
    const std::int64_t bound = std::max(h_value(n, k, 2), h_value(n, k, t));
    // Anything well under the bound cannot matter; skip the cycle search.
    if (g.size() < bound) {
      if (has_cycle_at_least(g, k)) return r.record("long-cycle");
      edges[i] = g.size();
      return r.record("below-maximum");
    }
    if (has_cycle_at_least(g, k)) return r.record("long-cycle");
    edges[i] = g.size();
    if (g.size() > bound) return r.fail(to_graph6(g), "e = " + std::to_string(g.size()) + " exceeds the bound " + std::to_string(bound));
    const Graph c = canonical_form(g);
    const auto& [h2, ht] = extremal.at(n);
    if (c == h2) return r.record("extremal:H(n,k,2)");
    if (c == ht) return r.record("extremal:H(n,k,t)");
    r.fail(to_graph6(g), "attains the bound but is neither H(n,k,2) nor H(n,k,t)");
  });
  std::map<int, int> best;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (edges[i] >= 0) best[graphs[i].order()] = std::max(best[graphs[i].order()], edges[i]);
  for (const auto& [n, e] : best) {
    const std::int64_t bound = std::max(h_value(n, k, 2), h_value(n, k, t));
    rep.findings.push_back("n=" + std::to_string(n) + ": max e = " + std::to_string(e) + ", bound " + std::to_string(bound));
    if (e != bound) rep.fail("", "n=" + std::to_string(n) + ": maximum " + std::to_string(e) + " differs from the bound " + std::to_string(bound));
  }
  rep.theorem = "kopylov-maximum";
  rep.param("k", k);
  rep.coverage_mode = opts.coverage;
  rep.finalize();
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

VerificationReport seven_cycle_corollary_sweep(std::span<const Graph> graphs, const SweepOptions& opts) {
  auto start = Clock::now();
  auto rep = run_chunked(graphs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    const int n = g.order();
    if (n < 8) return r.record("outside-range");
    if (!is_2_connected(g)) return r.record("not-2-connected");
    if (g.size() < (5 * n - 6) / 2) return r.record("below-bound");
    if (has_cycle_at_least(g, 7)) return r.record("long-cycle");
    if (embeds_in_H(g, 7, 3)) return r.record("in-H(n,7,3)");
    r.fail(to_graph6(g), "c < 7 and e = " + std::to_string(g.size()) + " but not a subgraph of H(n,7,3)");
  });
  rep.theorem = "seven-cycle-corollary";
  rep.coverage_mode = opts.coverage;
  rep.finalize();
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

VerificationReport path_sweep(std::span<const Graph> graphs, int k, const SweepOptions& opts) {
  auto start = Clock::now();
  const int t = k / 2;
  auto rep = run_chunked(graphs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    const int n = g.order();
    if (!is_connected(g)) return r.record("not-connected");
    const int path_vertices = n == 0 ? 0 : longest_path(g).length + 1;
    const bool has_pk = path_vertices >= k;
    std::string outcome;
    if (2LL * g.size() > static_cast<long long>(k - 2) * n) {
      if (!has_pk) return r.fail(to_graph6(g), "e > (k-2)n/2 without a k-vertex path");
      outcome = "eg:path";
    } else {
      outcome = "eg:below";
    }
    if (t < 2 || n < 3 * t - 1) return r.record(outcome + " path-stability:outside-range");
    if (has_pk) return r.record(outcome + " path-stability:has-path");
    if (g.size() <= h_value(n + 1, k + 1, t - 1) - n) return r.record(outcome + " path-stability:below-bound");

    std::optional<std::string> direct;
    if (k == 2 * t && k != 6) {
      if (embeds_in_H(g, k, t - 1)) direct = "in-H(n,k,t-1)";
    } else if (star_forest_witness(g, t - 1)) {
      direct = "star-forest";
    }
    const Graph apex = add_apex(g);
    bool apex_premise = !has_cycle_at_least(apex, k + 1) && apex.size() > h_value(n + 1, k + 1, t - 1);
    bool apex_holds = apex_premise && cycle_stability_conclusion(apex, k + 1).has_value();
    if (!apex_premise) return r.fail(to_graph6(g), "apex graph misses the cycle-version premises");
    if (!direct) return r.fail(to_graph6(g), "above h(n+1,k+1,t-1)-n without the path-version structure");
    if (!apex_holds) return r.fail(to_graph6(g), "direct structure found but the apex graph lacks it");
    r.record(outcome + " path-stability:" + *direct);
  });
  rep.theorem = "path-theorems";
  rep.param("k", k);
  rep.coverage_mode = opts.coverage;
  rep.finalize();
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

VerificationReport apex_sweep(std::span<const Graph> graphs, const SweepOptions& opts) {
  auto start = Clock::now();
  auto rep = run_chunked(graphs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    if (g.order() < 2 || !is_connected(g)) return r.record("skipped");
    const int p = longest_path(g).length + 1;
    const int c = circumference(add_apex(g));
    if (c != p + 1)
      return r.fail(to_graph6(g), "longest path has " + std::to_string(p) + " vertices but c(apex) = " + std::to_string(c));
    r.record("equivalent");
  });
  rep.theorem = "apex-equivalence";
  rep.coverage_mode = opts.coverage;
  rep.finalize();
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

VerificationReport procedure_grid_audit(int k, int n_max, int variants_per_member, std::uint64_t seed,
                                        const SweepOptions& opts) {
  auto start = Clock::now();
  std::vector<Graph> inputs;
  std::mt19937_64 rng(seed);
  for (const auto& m : construction_grid(k, k, n_max)) {
    inputs.push_back(m.member.graph);
    auto edges = m.member.graph.edges();
    for (int v = 0, tries = 0; v < variants_per_member && tries < 20 * variants_per_member; ++tries) {
      GraphBuilder b(m.member.graph);
      const int drop = 1 + static_cast<int>(rng() % 3);
      for (int d = 0; d < drop; ++d) {
        auto e = edges[rng() % edges.size()];
        b.remove_edge(e.u, e.v);
      }
      auto g = b.build();
      if (!is_2_connected(g)) continue;
      inputs.push_back(std::move(g));
      ++v;
    }
  }
  auto rep = run_chunked(inputs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = inputs[i];
    if (g.size() <= h_value(g.order(), k, t_of(k) - 1)) return r.record("skipped:below-bound");
    auto trace = basic_procedure(g, k);
    auto audit = audit_trace(trace);
    for (const auto& s : trace.steps) ++r.stats["rule " + rule_name(s.rule)];
    if (!audit.ok()) {
      std::string diag;
      for (const auto& e : audit.entries)
        if (!e.passed) {
          diag = "step " + std::to_string(e.step) + ": " + e.check + (e.detail.empty() ? "" : " (" + e.detail + ")");
          break;
        }
      return r.fail(to_graph6(g), diag);
    }
    r.record(trace.in_hypotheses ? "audited:in-hypotheses" : "audited:outside-hypotheses");
  });
  rep.theorem = "procedure-audit";
  rep.param("k", k);
  rep.param("n_max", n_max);
  rep.coverage_mode = "property-based";
  rep.finalize();
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

VerificationReport stability_property_check(int k, int samples, std::uint64_t seed, const SweepOptions& opts) {
  auto start = Clock::now();
  const int t = t_of(k);
  const int n_lo = (3 * k + 1) / 2;
  auto grid = construction_grid(k, n_lo, n_lo + 6);
  const auto list = class_list(k, opts.classify);
  auto bound = [&](const Graph& g) { return h_value(g.order(), k, t - 1); };

  // Round trip: the member's own class recognises it, and above the edge
  // bound the full classifier returns some class.
  VerificationReport rep = run_chunked(grid.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
    const auto& gm = grid[i];
    const Graph& g = gm.member.graph;
    auto own = std::find_if(list.begin(), list.end(), [&](const ClassEntry& e) { return e.label == gm.label; });
    if (own == list.end()) return r.fail(to_graph6(g), gm.label + " is not in the class list");
    auto w = match_class(g, *own, opts.classify.g6);
    if (!w || !verify_witness(g, *w)) return r.fail(to_graph6(g), "round trip: " + gm.label + " does not recognise its own member");
    if (g.size() <= bound(g)) return r.record("round-trip:below-bound:" + gm.label);
    auto [outcome, diag] = stability_outcome(g, k, StabilityMode::Main, opts.classify);
    if (diag) return r.fail(to_graph6(g), "round trip of " + gm.label + ": " + *diag);
    r.record("round-trip:" + outcome);
  });

  std::map<std::string, std::vector<const GridMember*>> by_class;
  for (const auto& e : list) by_class[e.label];
  for (const auto& m : grid)
    if (m.member.graph.size() >= bound(m.member.graph) + 2) by_class[m.label].push_back(&m);

  std::size_t class_index = 0;
  for (const auto& [label, members] : by_class) {
    const std::uint64_t class_seed = seed * 1000003ULL + class_index++;
    if (members.empty()) {
      rep.findings.push_back(label + ": no grid member above the edge bound, no samples drawn");
      continue;
    }
    auto part = run_chunked(static_cast<std::size_t>(samples), opts.jobs, [&](std::size_t i, VerificationReport& r) {
      std::mt19937_64 rng(class_seed * 0x9E3779B97F4A7C15ULL + i);
      while (true) {
        const auto& m = *members[rng() % members.size()];
        const Graph& host = m.member.graph;
        auto edges = host.edges();
        const int room = static_cast<int>(host.size() - bound(host) - 1);
        const int drop = 1 + static_cast<int>(rng() % std::min(4, room));
        GraphBuilder b(host);
        for (int d = 0; d < drop; ++d) {
          auto e = edges[rng() % edges.size()];
          b.remove_edge(e.u, e.v);
        }
        auto g = b.build();
        if (!is_2_connected(g)) {
          ++r.stats["rejected (not 2-connected)"];
          continue;
        }
        // Subgraphs of a member keep c < k, so only the verdict is needed.
        ClassifyOptions o = opts.classify;
        o.check_preconditions = false;
        auto v = classify_stability(g, k, o);
        if (v.kind == VerdictKind::ClassMember && verify_witness(g, *v.witness))
          return r.record("sample:" + label + ":class:" + v.witness->label);
        return r.fail(to_graph6(g), "edge-deleted " + label + " member not classified");
      }
    });
    rep.merge(part);
  }
  rep.theorem = "stability/property";
  rep.param("k", k);
  rep.param("samples_per_class", samples);
  rep.param("seed", static_cast<long long>(seed));
  rep.coverage_mode = "property-based";
  rep.finalize();
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

VerificationReport extremal_grid_check(int k_min, int k_max, int n_max, const SweepOptions& opts) {
  auto start = Clock::now();
  std::vector<std::pair<Graph, std::string>> items;
  std::vector<int> expect;  // k for "c = k-1" items, -k for "c < k" items
  for (int k = k_min; k <= k_max; ++k) {
    for (int n = k; n <= n_max; ++n) {
      items.emplace_back(build_H(n, k, t_of(k)).graph, "H(" + std::to_string(n) + "," + std::to_string(k) + ",t)");
      expect.push_back(k);
    }
    for (const auto& m : construction_grid(k, k, n_max)) {
      items.emplace_back(m.member.graph, m.label + " n=" + std::to_string(m.member.n));
      expect.push_back(-m.k);
    }
  }
  auto rep = run_chunked(items.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
    const auto& [g, name] = items[i];
    const int c = circumference(g);
    if (!is_2_connected(g)) return r.fail(to_graph6(g), name + " is not 2-connected");
    if (expect[i] > 0) {
      if (c != expect[i] - 1) return r.fail(to_graph6(g), name + " has c = " + std::to_string(c));
      return r.record("H:c=k-1");
    }
    if (c >= -expect[i]) return r.fail(to_graph6(g), name + " has c = " + std::to_string(c));
    r.record("class:c<k");
  });
  rep.theorem = "extremal-circumference";
  rep.param("k_min", k_min);
  rep.param("k_max", k_max);
  rep.param("n_max", n_max);
  rep.finalize();
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

}  // namespace egstab
