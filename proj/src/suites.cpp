#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "egstab/canon.hpp"
#include "egstab/contraction.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/graph6.hpp"
#include "egstab/harness.hpp"
#include "egstab/structure.hpp"

namespace egstab {

namespace {

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<Graph> all_graphs(int lo, int hi, GraphFilter f) {
  std::vector<Graph> out;
  for (int n = std::max(lo, 1); n <= hi; ++n) {
    GraphSource src;
    src.n = n;
    auto part = load_graphs(src, f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

VerificationReport finish(VerificationReport rep, const std::string& theorem, Clock::time_point start,
                          const std::string& coverage = "exhaustive") {
  rep.theorem = theorem;
  rep.coverage_mode = coverage;
  rep.finalize();
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

bool is_linear_forest(int n, std::span<const EdgeRef> f, int* components) {
  std::vector<int> parent(n), deg(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  VertexSet touched = 0;
  int comps = 0;
  for (auto e : f) {
    if (++deg[e.u] > 2 || ++deg[e.v] > 2) return false;
    int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
    touched |= bit(e.u) | bit(e.v);
  }
  for_each_vertex(touched, [&](int v) { comps += find(v) == v; });
  if (components) *components = comps;
  return true;
}

// Calls fn on every subset of `edges` with exactly `size` elements.
template <class F>
void for_each_edge_subset(const std::vector<EdgeRef>& edges, int size, F&& fn) {
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  const int m = static_cast<int>(edges.size());
  if (size > m) return;
  std::vector<EdgeRef> pick(size);
  while (true) {
    for (int i = 0; i < size; ++i) pick[i] = edges[idx[i]];
    fn(std::span<const EdgeRef>(pick));
    int i = size - 1;
    while (i >= 0 && idx[i] == m - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int sigma2(const Graph& g) {
  int best = 2 * g.order();
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) best = std::min(best, g.degree(u) + g.degree(v));
  return best;
}

// Path-lemma check on one path: c >= min(l, d(x,P) + d(y,P)).
bool path_lemma_holds(const Graph& g, const std::vector<int>& path, int c) {
  const VertexSet on = to_set(path);
  const int l = static_cast<int>(path.size());
  const int dx = g.degree_into(path.front(), on);
  const int dy = g.degree_into(path.back(), on);
  return c >= std::min(l, dx + dy);
}

VerificationReport erdos_check(int max_n, int jobs) {
  auto start = Clock::now();
  auto graphs = all_graphs(3, max_n, GraphFilter::All);
  auto rep = run_chunked(graphs.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    const int n = g.order();
    bool needs = false;
    for (int d = 1; 2 * d < n; ++d)
      if (g.min_degree() >= d && g.size() > ell_value(n, d)) needs = true;
    if (!needs) return r.record("not-applicable");
    auto cyc = hamiltonian_cycle(g);
    if (!cyc || !is_valid_cycle(g, *cyc)) return r.fail(to_graph6(g), "above ell(n,d) with min degree d but not hamiltonian");
    r.record("hamiltonian");
  });
  rep.param("n_max", max_n);
  return finish(rep, "classical/erdos-hamiltonian", start);
}

VerificationReport dirac_check(int max_n, int jobs) {
  auto start = Clock::now();
  auto graphs = all_graphs(3, max_n, GraphFilter::TwoConnected);
  auto rep = run_chunked(graphs.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    const int c = circumference(g);
    if (c < std::min(g.order(), 2 * g.min_degree())) return r.fail(to_graph6(g), "c < min(n, 2 delta)");
    r.record("holds");
  });
  rep.param("n_max", max_n);
  return finish(rep, "classical/dirac", start);
}

VerificationReport path_lemma_check(int max_n, int jobs) {
  auto start = Clock::now();
  auto graphs = all_graphs(3, max_n, GraphFilter::TwoConnected);
  auto rep = run_chunked(graphs.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    const int n = g.order();
    const int c = circumference(g);
    std::mt19937_64 rng(i + 1);
    std::int64_t paths = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        auto p = longest_xy_path(g, x, y);
        if (!p.found) continue;
        ++paths;
        if (!path_lemma_holds(g, p.witness, c))
          return r.fail(to_graph6(g), "longest " + std::to_string(x) + "," + std::to_string(y) + "-path breaks the bound");
      }
      // A random maximal path from x.
      std::vector<int> walk{x};
      VertexSet used = bit(x);
      while (true) {
        auto next = to_vector(g.neighbors(walk.back()) & ~used);
        if (next.empty()) break;
        int v = next[rng() % next.size()];
        walk.push_back(v);
        used |= bit(v);
      }
      if (walk.size() >= 2) {
        ++paths;
        if (!path_lemma_holds(g, walk, c)) return r.fail(to_graph6(g), "random path from " + std::to_string(x) + " breaks the bound");
      }
    }
    r.stats["paths"] += paths;
    r.record("holds");
  });
  rep.param("n_max", max_n);
  return finish(rep, "classical/path-lemma", start, "sampled");
}

VerificationReport chvatal_check(int max_n, int jobs) {
  auto start = Clock::now();
  auto graphs = all_graphs(3, max_n, GraphFilter::All);
  auto rep = run_chunked(graphs.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    if (has_cycle_at_least(g, g.order())) return r.record("hamiltonian");
    try {
      int idx = chvatal_index(g);
      ++r.stats["index " + std::to_string(idx)];
      r.record("index-found");
    } catch (const GraphError&) {
      r.fail(to_graph6(g), "non-hamiltonian without a degree-sequence index");
    }
  });
  rep.param("n_max", max_n);
  return finish(rep, "classical/chvatal", start);
}

VerificationReport closure_check(int max_n, int jobs) {
  auto start = Clock::now();
  auto graphs = all_graphs(3, max_n, GraphFilter::All);
  auto rep = run_chunked(graphs.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    const int n = g.order();
    const Graph cl = k_closure(g, n);
    const bool ham = has_cycle_at_least(g, n);
    if (has_cycle_at_least(cl, n) && !ham) return r.fail(to_graph6(g), "closure hamiltonian but the graph is not");
    if (cl.size() == n * (n - 1) / 2) {
      auto cyc = hamiltonian_cycle(g);
      if (!cyc || !is_valid_cycle(g, *cyc)) return r.fail(to_graph6(g), "complete closure but no hamiltonian cycle found");
      return r.record("complete-closure");
    }
    r.record(ham ? "hamiltonian" : "not-hamiltonian");
  });
  rep.param("n_max", max_n);
  return finish(rep, "classical/closure", start);
}

VerificationReport posa_check(int max_n, int jobs) {
  auto start = Clock::now();
  auto graphs = all_graphs(3, max_n, GraphFilter::All);
  auto rep = run_chunked(graphs.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    const int n = g.order();
    const int s = sigma2(g);
    const auto edges = g.edges();
    bool applied = false;
    for (int k = 0; k <= 2 && k < n; ++k) {
      if (s < n + k) continue;
      applied = true;
      bool bad = false;
      for_each_edge_subset(edges, k, [&](std::span<const EdgeRef> f) {
        if (bad || !is_linear_forest(n, f, nullptr)) return;
        ++r.stats["forests"];
        auto cyc = hamiltonian_cycle_through(g, f);
        if (!cyc || !is_valid_cycle(g, *cyc)) bad = true;
      });
      if (bad) return r.fail(to_graph6(g), "degree-sum condition for " + std::to_string(k) + " edges but a forest is missed");
    }
    r.record(applied ? "holds" : "not-applicable");
  });
  rep.param("n_max", max_n);
  return finish(rep, "classical/posa", start);
}

VerificationReport bipartite_forest_check(const std::vector<int>& sizes) {
  auto start = Clock::now();
  VerificationReport rep;
  for (int s : sizes) {
    const Graph full = complete_bipartite(s, s);
    const auto all = full.edges();
    for (int i = 1; i <= 2; ++i) {
      const int max_missing = s * s - (s * s - s + 2 + i);
      std::set<Graph> hosts;
      for (int miss = 0; miss <= max_missing; ++miss) {
        for_each_edge_subset(all, miss, [&](std::span<const EdgeRef> gone) {
          GraphBuilder b(full);
          for (auto e : gone) b.remove_edge(e.u, e.v);
          hosts.insert(canonical_form(b.build()));
        });
      }
      for (const auto& host : hosts) {
        const auto edges = host.edges();
        bool bad = false;
        for (int f = 0; f <= 2 * i && !bad; ++f) {
          for_each_edge_subset(edges, f, [&](std::span<const EdgeRef> forest) {
            int comps = 0;
            if (bad || !is_linear_forest(host.order(), forest, &comps) || comps > 2) return;
            ++rep.stats["forests"];
            auto cyc = hamiltonian_cycle_through(host, forest);
            if (!cyc || !is_valid_cycle(host, *cyc)) bad = true;
          });
        }
        if (bad) rep.fail(to_graph6(host), "s=" + std::to_string(s) + ", i=" + std::to_string(i) + ": a linear forest is on no hamiltonian cycle");
        else rep.record("s=" + std::to_string(s) + " i=" + std::to_string(i));
      }
    }
  }
  return finish(rep, "classical/bipartite-linear-forest", start);
}

VerificationReport enomoto_check(int max_n, int jobs) {
  auto start = Clock::now();
  auto graphs = all_graphs(5, max_n, GraphFilter::TwoConnected);
  auto rep = run_chunked(graphs.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    const int n = g.order();
    if (!is_3_connected(g)) return r.record("not-3-connected");
    const int s = std::min(sigma2(g), n);
    if (s < 5) return r.record("degree-sum-below-5");
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (longest_xy_path(g, x, y).length < s - 2)
          return r.fail(to_graph6(g), "no " + std::to_string(x) + "," + std::to_string(y) + "-path of length s-2 = " + std::to_string(s - 2));
    r.record("holds");
  });
  rep.param("n_max", max_n);
  return finish(rep, "classical/enomoto-path", start);
}

VerificationReport nonhamiltonian_check(int max_n, int jobs) {
  auto start = Clock::now();
  VerificationReport rep;
  for (int n = 5; n <= max_n; ++n) {
    GraphSource src;
    src.n = n;
    const auto graphs = load_graphs(src, GraphFilter::TwoConnected);
    std::vector<int> edges(graphs.size(), -1);
    auto part = run_chunked(graphs.size(), jobs, [&](std::size_t i, VerificationReport& r) {
      const Graph& g = graphs[i];
      if (is_hamiltonian(g)) return r.record("hamiltonian");
      edges[i] = g.size();
      if (g.size() > ell_value(n, 2)) return r.fail(to_graph6(g), "non-hamiltonian above ell(n,2)");
      r.record("non-hamiltonian");
    });
    rep.merge(part);
    int best = -1;
    std::vector<std::string> maximisers;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (edges[i] > best) {
        best = edges[i];
        maximisers.clear();
      }
      if (edges[i] == best) maximisers.push_back(to_graph6(graphs[i]));
    }
    const std::int64_t simple = binom2(n - 2) + 4;
    std::string line = "n=" + std::to_string(n) + ": max e = " + std::to_string(best) + ", C(n-2,2)+4 = " +
                       std::to_string(simple) + ", ell(n,2) = " + std::to_string(ell_value(n, 2));
    if (best > simple) line += "; exceeds the simplified bound";
    const bool only_h = maximisers.size() == 1 && isomorphic(from_graph6(maximisers[0]), build_H(n, n, 2).graph);
    line += best == simple ? (only_h ? "; equality only for H(n,n,2)" : "; equality not only for H(n,n,2)") : "";
    line += "; maximisers:";
    for (const auto& m : maximisers) line += " " + m;
    rep.findings.push_back(line);
    if (best > simple) ++rep.stats["n values above the simplified bound"];
  }
  rep.param("n_max", max_n);
  return finish(rep, "classical/nonhamiltonian-bound", start);
}

}  // namespace

std::vector<VerificationReport> classical_suite(const ClassicalLimits& limits, const SweepOptions& opts) {
  return {
      erdos_check(limits.erdos_max_n, opts.jobs),
      dirac_check(limits.dirac_max_n, opts.jobs),
      path_lemma_check(limits.path_lemma_max_n, opts.jobs),
      chvatal_check(limits.chvatal_max_n, opts.jobs),
      closure_check(limits.closure_max_n, opts.jobs),
      posa_check(limits.posa_max_n, opts.jobs),
      bipartite_forest_check(limits.bipartite_s),
      enomoto_check(limits.enomoto_max_n, opts.jobs),
      nonhamiltonian_check(limits.nonham_max_n, opts.jobs),
  };
}

std::vector<VerificationReport> contraction_suite(const ContractionLimits& limits, const SweepOptions& opts) {
  std::vector<VerificationReport> out;
  {
    auto start = Clock::now();
    auto graphs = all_graphs(4, limits.partner_max_n, GraphFilter::TwoConnected);
    auto rep = run_chunked(graphs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
      const Graph& g = graphs[i];
      for (int v = 0; v < g.order(); ++v) {
        VertexSet good = 0;
        for_each_vertex(g.neighbors(v), [&](int w) {
          if (is_2_connected(contract_edge(g, EdgeRef::of(v, w)).graph)) good |= bit(w);
        });
        const VertexSet ws = w_set(g, v);
        if (!good) return r.fail(to_graph6(g), "vertex " + std::to_string(v) + " has no contractible edge");
        if (ws && !(good & ws)) return r.fail(to_graph6(g), "vertex " + std::to_string(v) + " has no contractible edge into W(v)");
        auto w = safe_partner(g, v);
        if (!w || !contains(good, *w) || (ws && !contains(ws, *w)))
          return r.fail(to_graph6(g), "safe_partner disagrees at vertex " + std::to_string(v));
      }
      r.record("holds");
    });
    rep.param("n_max", limits.partner_max_n);
    out.push_back(finish(rep, "contraction/safe-partner", start));
  }
  {
    auto start = Clock::now();
    auto graphs = all_graphs(3, limits.cycle_pair_max_n, GraphFilter::TwoConnected);
    auto rep = run_chunked(graphs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
      const Graph& g = graphs[i];
      const int c = circumference(g);
      for (auto e : g.edges())
        if (separates(g, bit(e.u) | bit(e.v)) && longest_cycle_through_edge(g, e) >= c)
          return r.fail(to_graph6(g), "separating pair " + std::to_string(e.u) + "," + std::to_string(e.v) + " is consecutive on a longest cycle");
      r.record("holds");
    });
    rep.param("n_max", limits.cycle_pair_max_n);
    out.push_back(finish(rep, "contraction/longest-cycle-pairs", start));
  }
  {
    auto start = Clock::now();
    auto graphs = all_graphs(2, limits.monotone_max_n, GraphFilter::All);
    auto rep = run_chunked(graphs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
      const Graph& g = graphs[i];
      if (g.size() == 0) return r.record("edgeless");
      for (auto e : g.edges()) {
        const Graph h = contract_edge(g, e).graph;
        if (h.min_degree() < g.min_degree() - 1) return r.fail(to_graph6(g), "min degree drops by 2 or more");
        if (h.size() > 0 && min_triangle_count(h) < min_triangle_count(g) - 1)
          return r.fail(to_graph6(g), "min triangle count drops by 2 or more");
      }
      r.record("holds");
    });
    rep.param("n_max", limits.monotone_max_n);
    out.push_back(finish(rep, "contraction/monotonicity", start));
  }
  {
    auto start = Clock::now();
    auto graphs = all_graphs(4, limits.low_degree_max_n, GraphFilter::TwoConnected);
    auto rep = run_chunked(graphs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
      const Graph& gp = graphs[i];
      bool applied = false;
      for (auto e : guarded_candidates(gp)) {
        const Graph g = contract_edge(gp, e).graph;
        for (int h = 2; h <= 3; ++h) {
          int low = 0;
          for (int v = 0; v < g.order(); ++v) low += g.degree(v) <= h;
          if (low < h) continue;
          applied = true;
          if (gp != complete_graph(h + 2) && gp.min_degree() > h)
            return r.fail(to_graph6(gp), "h=" + std::to_string(h) + ": low degrees appear only after contracting " +
                                             std::to_string(e.u) + "," + std::to_string(e.v));
        }
      }
      r.record(applied ? "holds" : "not-applicable");
    });
    rep.param("n_max", limits.low_degree_max_n);
    out.push_back(finish(rep, "contraction/low-degree-preimage", start));
  }
  return out;
}

std::optional<std::string> bridge_claims_check(const Graph& g) {
  auto cycles = all_longest_cycles(g);
  if (cycles.empty()) return "no cycle";
  const std::vector<int>* best = nullptr;
  int best_sum = -1;
  for (const auto& c : cycles) {
    int sum = 0;
    for (int v : c) sum += g.degree(v);
    if (sum > best_sum) {
      best_sum = sum;
      best = &c;
    }
  }
  const auto& cycle = *best;
  const auto dec = cycle_bridges(g, cycle);
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i);
  auto name = [](int v) { return std::to_string(v); };

  struct Chord {
    int lo, hi;
    std::size_t bridge;
  };
  std::vector<Chord> chords;
  for (std::size_t bi = 0; bi < dec.bridges.size(); ++bi) {
    const auto& b = dec.bridges[bi];
    const VertexSet S = b.S;
    const auto att = to_vector(b.attachments);
    for (std::size_t i = 0; i < att.size(); ++i) {
      for (std::size_t j = i + 1; j < att.size(); ++j) {
        const int x = att[i], y = att[j];
        const int d = dec.cycle_distance(x, y);
        const int len = longest_path_through(g, x, y, S);
        if (len > d) return "bridge path " + name(x) + "-" + name(y) + " of length " + std::to_string(len) + " beats cycle distance " + std::to_string(d);
        if (len > 3) return "bridge path longer than 3";
        const VertexSet nx = g.neighbors(x) & S, ny = g.neighbors(y) & S;
        const bool distinct_ends = count(nx | ny) >= 2 && nx && ny && !(count(nx) == 1 && nx == ny);
        if (distinct_ends && d < 3) return "distinct bridge neighbours of " + name(x) + "," + name(y) + " at cycle distance " + std::to_string(d);
        if (len >= 2) chords.push_back({std::min(pos[x], pos[y]), std::max(pos[x], pos[y]), bi});
      }
    }
    const int s = count(S);
    if (g.edges_within(S) != s - 1) return "bridge is not a tree";
    if (s >= 3) {
      int center = -1;
      for_each_vertex(S, [&](int v) {
        if (g.degree_into(v, S) == s - 1) center = v;
      });
      if (center < 0) return "bridge is not a star";
      VertexSet anchors = 0;
      bool leaf_degree = true;
      for_each_vertex(S & ~bit(center), [&](int leaf) {
        if (g.degree(leaf) != 2) leaf_degree = false;
        anchors |= g.neighbors(leaf) & dec.X;
      });
      if (!leaf_degree) return "star leaf of degree other than 2";
      if (count(anchors) != 1) return "star leaves see different cycle vertices";
    }
    if (s >= 2) {
      if (att.size() != 2) return "bridge with 2+ vertices has " + std::to_string(att.size()) + " attachments";
      if (!is_j3_bridge(g, S, att[0], att[1])) return "bridge with 2+ vertices is not a J3-bridge";
      if (dec.cycle_distance(att[0], att[1]) < 3) return "J3-bridge endpoints at cycle distance below 3";
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = 0; j < chords.size(); ++j) {
      const auto& a = chords[i];
      const auto& b = chords[j];
      if (a.bridge == b.bridge) continue;
      if (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) return "crossing paths through two bridges";
    }
  }
  std::vector<VertexSet> j3;
  for (const auto& b : dec.bridges)
    if (count(b.S) >= 2) j3.push_back(b.attachments);
  for (std::size_t i = 0; i < j3.size(); ++i)
    for (std::size_t j = i + 1; j < j3.size(); ++j)
      if (!(j3[i] & j3[j])) return "two J3-bridges without a common endpoint";
  return std::nullopt;
}

VerificationReport bridge_claims_sweep(std::span<const Graph> graphs, const SweepOptions& opts) {
  auto start = Clock::now();
  auto rep = run_chunked(graphs.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
    const Graph& g = graphs[i];
    if (!is_2_connected(g)) return r.record("not-2-connected");
    const int c = circumference(g);
    if (c >= 8) return r.record("long-cycle");
    if (auto d = bridge_claims_check(g)) return r.fail(to_graph6(g), *d);
    r.record("c=" + std::to_string(c));
  });
  return finish(rep, "bridge-structure", start, opts.coverage);
}

namespace {

struct ProfileMember {
  std::string name;
  LabeledConstruction m;
};

std::vector<ProfileMember> profile_members() {
  std::vector<ProfileMember> out;
  out.push_back({"F0", build_F_member({Family::F0, 4, {}, 0, {}, {}})});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 5; ++b)
      out.push_back({"F0-a" + std::to_string(a) + "b" + std::to_string(b), build_F_member({Family::F0, 4, {{a, b}}, 0, {}, {}})});
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4, Family::F4Prime})
    out.push_back({family_name(f), build_F_member({f, 4, {}, 0, {}, {}})});
  return out;
}

std::string pair_list(const std::vector<std::pair<int, int>>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i)
    s += (i ? " " : "") + std::to_string(ps[i].first) + "-" + std::to_string(ps[i].second);
  return s + "}";
}

}  // namespace

VerificationReport path_profile_check(const SweepOptions& opts) {
  auto start = Clock::now();
  constexpr int t = 4;
  const auto members = profile_members();
  std::vector<std::string> lines(members.size());
  auto rep = run_chunked(members.size(), opts.jobs, [&](std::size_t mi, VerificationReport& r) {
    const auto& [name, m] = members[mi];
    const Graph& g = m.graph;
    const VertexSet A = m.part("A");
    const Family f = m.family;
    const int a1 = m.vertex("a1");
    const int b1 = m.vertex("b1");
    std::vector<std::pair<int, int>> below1, below2, allowed1, allowed2;
    int minimum = 1 << 20;
    std::string diag;
    for (int x = 0; x < g.order(); ++x) {
      for (int y = x + 1; y < g.order(); ++y) {
        const int len = longest_xy_path(g, x, y).length;
        minimum = std::min(minimum, len);
        const bool both_a = contains(A, x) && contains(A, y);
        const bool one_a = contains(A, x) || contains(A, y);
        bool ok1 = false, ok2 = false;
        switch (f) {
          case Family::F0: ok1 = both_a; ok2 = true; break;
          case Family::F1: ok1 = both_a; ok2 = one_a; break;
          case Family::F2: ok2 = both_a || (std::min(a1, b1) == x && std::max(a1, b1) == y); break;
          case Family::F4: ok1 = both_a; ok2 = both_a; break;
          default: ok2 = both_a; break;
        }
        if (ok1) allowed1.emplace_back(x, y);
        if (ok2) allowed2.emplace_back(x, y);
        if (len < 2 * t - 2 && diag.empty()) diag = "pair " + std::to_string(x) + "," + std::to_string(y) + " has longest path " + std::to_string(len);
        if (len < 2 * t - 1) {
          below1.emplace_back(x, y);
          if (!ok1 && diag.empty()) diag = "pair " + std::to_string(x) + "," + std::to_string(y) + " lacks a path of length 2t-1";
        }
        if (len < 2 * t) {
          below2.emplace_back(x, y);
          if (!ok2 && diag.empty()) diag = "pair " + std::to_string(x) + "," + std::to_string(y) + " lacks a path of length 2t";
        }
      }
    }
    lines[mi] = name + ": min " + std::to_string(minimum) + "; below 2t-1: " + std::to_string(below1.size()) + " of " +
                std::to_string(allowed1.size()) + " allowed " + pair_list(below1) + "; below 2t: " +
                std::to_string(below2.size()) + " of " + std::to_string(allowed2.size()) + " allowed " + pair_list(below2);
    if (!diag.empty()) return r.fail(to_graph6(g), name + ": " + diag);
    ++r.stats[below1 == allowed1 ? "below 2t-1 set equals the table" : "below 2t-1 set strictly inside the table"];
    ++r.stats[below2 == allowed2 ? "below 2t set equals the table" : "below 2t set strictly inside the table"];
    r.record("within-table");
  });
  rep.findings = lines;
  rep.param("t", t);
  return finish(rep, "family-path-profile", start);
}

VerificationReport split_suite(const SweepOptions& opts) {
  auto start = Clock::now();
  struct Item {
    std::string name;
    LabeledConstruction m;
    int k;
  };
  std::vector<Item> items;
  items.push_back({"F0", build_F_member({Family::F0, 4, {}, 0, {}, {}}), 9});
  items.push_back({"F0-a0b0", build_F_member({Family::F0, 4, {{0, 0}}, 0, {}, {}}), 9});
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4, Family::F4Prime})
    items.push_back({family_name(f), build_F_member({f, 4, {}, 0, {}, {}}), 10});
  auto rep = run_chunked(items.size(), opts.jobs, [&](std::size_t i, VerificationReport& r) {
    const auto& it = items[i];
    auto s = split_preservation_check(it.m, it.k);
    r.stats[it.name + " supergraphs"] += s.supergraphs;
    r.stats[it.name + " splits"] += s.splits;
    r.stats[it.name + " qualifying"] += s.qualifying;
    if (!s.violations.empty()) {
      for (const auto& v : s.violations) r.fail(to_graph6(v), it.name + ": split loses every family member");
      return;
    }
    r.record("preserved");
  });
  return finish(rep, "split-preservation", start);
}

}  // namespace egstab
