#include "egstab/contraction.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "egstab/canon.hpp"
#include "egstab/recognizers.hpp"
#include "egstab/structure.hpp"

namespace egstab {

VertexSet w_set(const Graph& g, int v) {
  VertexSet closed_v = g.neighbors(v) | bit(v);
  VertexSet out = 0;
  for_each_vertex(g.neighbors(v), [&](int w) {
    if (closed_v & ~(g.neighbors(w) | bit(w))) out |= bit(w);
  });
  return out;
}

namespace {

bool contraction_2connected(const Graph& g, EdgeRef e) {
  return is_2_connected(contract_edge(g, e).graph);
}

}  // namespace

std::optional<int> safe_partner(const Graph& g, int v) {
  g.require_vertex(v);
  if (g.order() < 4 || !is_2_connected(g)) throw ParameterError("safe_partner needs a 2-connected graph on at least 4 vertices");
  VertexSet w = w_set(g, v);
  VertexSet pool = w ? w : g.neighbors(v);
  for (int u : to_vector(pool)) {
    if (contraction_2connected(g, EdgeRef::of(u, v))) return u;
  }
  return std::nullopt;
}

std::vector<EdgeRef> contractible_edges(const Graph& g) {
  std::vector<EdgeRef> out;
  for (auto e : g.edges())
    if (contraction_2connected(g, e)) out.push_back(e);
  return out;
}

std::vector<EdgeRef> guarded_candidates(const Graph& g) {
  std::vector<EdgeRef> best;
  std::pair<int, int> best_key{1 << 30, 1 << 30};
  for (auto e : contractible_edges(g)) {
    std::pair<int, int> key{triangles_on_edge(g, e), std::min(g.degree(e.u), g.degree(e.v))};
    if (key < best_key) {
      best_key = key;
      best.clear();
    }
    if (key == best_key) best.push_back(e);
  }
  return best;
}

GuardedStep guarded_contraction_step(const Graph& g) {
  auto c = guarded_candidates(g);
  if (c.empty()) throw ParameterError("no contraction keeps the graph 2-connected");
  return {contract_edge(g, c.front()).graph, c.front()};
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
  }
  return "?";
}

namespace {

// The R2 edge: T <= t-2, 2-connected contraction, min T, then min incident degree.
std::optional<EdgeRef> r2_choice(const Graph& g, int t) {
  std::optional<EdgeRef> best;
  std::tuple<int, int> best_key{1 << 30, 1 << 30};
  for (auto e : g.edges()) {
    int T = triangles_on_edge(g, e);
    if (T > t - 2) continue;
    std::tuple<int, int> key{T, std::min(g.degree(e.u), g.degree(e.v))};
    if (key >= best_key) continue;
    if (!contraction_2connected(g, e)) continue;
    best_key = key;
    best = e;
  }
  return best;
}

bool is_clique_of(const Graph& g, VertexSet s, int size) {
  return count(s) == size && g.edges_within(s) == size * (size - 1) / 2;
}

struct R3Choice {
  EdgeRef edge;
  VertexSet clique;
};

std::optional<R3Choice> r3_choice(const Graph& g, int t) {
  for (auto e : g.edges()) {
    VertexSet rest = g.vertices() & ~bit(e.u) & ~bit(e.v);
    auto comps = components(g, rest);
    if (comps.size() < 3) continue;
    for (VertexSet c : comps) {
      if (is_clique_of(g, c, t - 1)) return R3Choice{e, c};
    }
  }
  return std::nullopt;
}

ProcedureStep open_step(Rule r, const Graph& g, bool conn) {
  ProcedureStep s;
  s.rule = r;
  s.n_before = g.order();
  s.e_before = g.size();
  s.connected2_before = conn;
  return s;
}

}  // namespace

ProcedureTrace basic_procedure(const Graph& g, int k) {
  if (k < 5) throw ParameterError("the basic procedure needs k >= 5");
  if (g.order() < k) throw ParameterError("the basic procedure needs n >= k");
  if (!is_2_connected(g)) throw ParameterError("the basic procedure needs a 2-connected graph");
  ProcedureTrace tr;
  tr.k = k;
  tr.t = t_of(k);
  tr.initial = g;
  const int t = tr.t;
  if (g.size() < h_value(g.order(), k, t - 1) + 1) {
    tr.in_hypotheses = false;
    tr.notes.push_back("out of theorem hypotheses: e(G) <= h(n,k,t-1)");
  }
  if (has_cycle_at_least(g, k)) {
    tr.in_hypotheses = false;
    tr.notes.push_back("out of theorem hypotheses: c(G) >= k");
  }

  Graph cur = g;
  while (true) {
    const int j = cur.order();
    const bool conn = is_2_connected(cur);
    if (j == k) {
      auto s = open_step(Rule::R1, cur, conn);
      s.n_after = j;
      s.e_after = cur.size();
      s.connected2_after = conn;
      tr.steps.push_back(s);
      break;
    }
    if (auto e = r2_choice(cur, t)) {
      auto s = open_step(Rule::R2, cur, conn);
      s.edge = *e;
      s.T = triangles_on_edge(cur, *e);
      cur = contract_edge(cur, *e).graph;
      s.n_after = cur.order();
      s.e_after = cur.size();
      s.connected2_after = is_2_connected(cur);
      tr.steps.push_back(s);
      continue;
    }
    std::optional<R3Choice> r3;
    if (j >= k + t - 1) r3 = r3_choice(cur, t);
    if (r3) {
      auto s = open_step(Rule::R3, cur, conn);
      s.edge = r3->edge;
      s.removed = r3->clique;
      cur = remove_vertices(cur, r3->clique).graph;
      s.n_after = cur.order();
      s.e_after = cur.size();
      s.connected2_after = is_2_connected(cur);
      tr.steps.push_back(s);
      continue;
    }
    auto s = open_step(Rule::R4, cur, conn);
    s.n_after = j;
    s.e_after = cur.size();
    s.connected2_after = conn;
    tr.steps.push_back(s);
    break;
  }
  tr.final_graph = cur;
  return tr;
}

namespace {

Graph apply_step(const Graph& g, const ProcedureStep& s) {
  switch (s.rule) {
    case Rule::R2: return contract_edge(g, s.edge).graph;
    case Rule::R3: return remove_vertices(g, s.removed).graph;
    default: return g;
  }
}

}  // namespace

Graph replay(const ProcedureTrace& trace) {
  Graph g = trace.initial;
  for (const auto& s : trace.steps) g = apply_step(g, s);
  return g;
}

int AuditReport::failures() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const AuditEntry& e) { return !e.passed; }));
}

AuditReport audit_trace(const ProcedureTrace& trace) {
  AuditReport rep;
  const int k = trace.k;
  const int t = trace.t;
  auto add = [&](int step, std::string check, bool ok, std::string detail = {}) {
    rep.entries.push_back({step, std::move(check), ok, std::move(detail)});
  };
  // Below k vertices the bound is undefined; such graphs fail the check.
  auto bound = [&](const Graph& g) {
    return g.order() >= k ? h_value(g.order(), k, t - 1) + 1 : std::int64_t{1} << 40;
  };

  Graph cur = trace.initial;
  add(-1, "initial edge bound", cur.size() >= bound(cur),
      "e=" + std::to_string(cur.size()) + " need " + std::to_string(bound(cur)));
  add(-1, "initial circumference below k", !has_cycle_at_least(cur, k));
  bool seen_r3 = false;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    const int idx = static_cast<int>(i);
    const bool last = i + 1 == trace.steps.size();
    if (s.rule == Rule::R1 || s.rule == Rule::R4) {
      add(idx, "terminal rule is last", last);
      if (s.rule == Rule::R1) add(idx, "R1 fires exactly at j = k", cur.order() == k);
      else add(idx, "R4 fires only above k", cur.order() > k);
      continue;
    }
    add(idx, "step counts match", s.n_before == cur.order() && s.e_before == cur.size());
    if (s.rule == Rule::R2) {
      if (!cur.has_edge(s.edge)) {
        add(idx, "contracted edge exists", false);
        break;
      }
      int T = triangles_on_edge(cur, s.edge);
      add(idx, "R2 edge has T <= t-2", T <= t - 2, "T=" + std::to_string(T));
      add(idx, "no R2 after R3", !seen_r3);
    } else {
      add(idx, "R3 only when j >= k+t-1", cur.order() >= k + t - 1);
      add(idx, "R3 removes a K_{t-1}", is_clique_of(cur, s.removed, t - 1));
      VertexSet pair = bit(s.edge.u) | bit(s.edge.v);
      add(idx, "R3 pair leaves 3+ components", cur.has_edge(s.edge) && (s.removed & pair) == 0 &&
                                                   components(cur, cur.vertices() & ~pair).size() >= 3);
    }
    Graph next = apply_step(cur, s);
    const int loss = cur.size() - next.size();
    if (s.rule == Rule::R2) {
      add(idx, "R2 loses T+1 edges", loss == triangles_on_edge(cur, s.edge) + 1, "loss=" + std::to_string(loss));
      add(idx, "R2 loses at most t-1 edges", loss <= t - 1, "loss=" + std::to_string(loss));
    } else {
      add(idx, "R3 loses at most C(t+1,2)-1 edges", loss <= binom2(t + 1) - 1, "loss=" + std::to_string(loss));
    }
    add(idx, "2-connected after step", is_2_connected(next));
    add(idx, "edge bound after step", next.size() >= bound(next),
        "e=" + std::to_string(next.size()) + " need " + std::to_string(bound(next)));
    add(idx, "circumference below k after step", !has_cycle_at_least(next, k));
    if (s.rule == Rule::R3) {
      seen_r3 = true;
      add(idx, "no R2 edge after R3", !r2_choice(next, t).has_value());
      add(idx, "min degree at least t after R3", next.min_degree() >= t);
    }
    cur = std::move(next);
  }
  add(-1, "replay reproduces the final graph", cur == trace.final_graph);

  const int m = cur.order();
  const int n = trace.initial.order();
  const bool prop_applies = trace.in_hypotheses && t >= 4 && n >= 3 * t;
  if (m > k) add(-1, "min degree of G_m at least t", cur.min_degree() >= t, "delta=" + std::to_string(cur.min_degree()));
  if (prop_applies) {
    bool in_h = embeds_in_H(cur, k, t).has_value();
    bool f4 = m > k && k == 10 && contains_family_member(cur, Family::F4, 4).has_value();
    add(-1, "G_m inside H(m,k,t) or contains F4", in_h || f4);
    if (m == k && !is_hamiltonian(cur)) add(-1, "r(G_k) = t", chvatal_index(cur) == t);
  }
  return rep;
}

std::vector<Graph> vertex_splits(const Graph& f, int u) {
  f.require_vertex(u);
  const int n = f.order();
  if (n + 1 > kMaxVertices) throw ParameterError("split would exceed 63 vertices");
  std::vector<int> nb = to_vector(f.neighbors(u));
  const int d = static_cast<int>(nb.size());
  std::vector<Graph> out;
  std::vector<int> a(d, 0);  // 0: x only, 1: y only, 2: both
  while (true) {
    bool x_has = false;
    bool y_has = false;
    for (int v : a) {
      x_has = x_has || v != 1;
      y_has = y_has || v != 0;
    }
    std::vector<int> swapped(a);
    for (int& v : swapped) v = v == 2 ? 2 : 1 - v;
    if (x_has && y_has && a <= swapped) {
      GraphBuilder b(n + 1);
      for (auto e : f.edges())
        if (e.u != u && e.v != u) b.add_edge(e.u, e.v);
      b.add_edge(u, n);
      for (int i = 0; i < d; ++i) {
        if (a[i] != 1) b.add_edge(u, nb[i]);
        if (a[i] != 0) b.add_edge(n, nb[i]);
      }
      out.push_back(b.build());
    }
    int i = 0;
    while (i < d && a[i] == 2) a[i++] = 0;
    if (i == d) break;
    ++a[i];
  }
  return out;
}

SplitReport split_preservation_check(const LabeledConstruction& member, int k, const SplitOptions& opts) {
  const int t = member.t;
  if (k != 2 * t + 1 && k != 2 * t + 2) throw ParameterError("split check needs k in {2t+1, 2t+2}");
  if (k < 9) throw ParameterError("split check needs k >= 9");
  const int max_order = opts.max_order > 0 ? opts.max_order : 2 * t + 3;
  const Graph& h = member.graph;
  const int hn = h.order();

  std::set<Graph> seen;
  std::vector<std::pair<Graph, int>> hosts;  // F and the number of member vertices (labels 0..hn-1)
  auto offer = [&](const Graph& f) {
    if (f.order() > max_order || !is_2_connected(f) || has_cycle_at_least(f, k)) return;
    if (seen.insert(canonical_form(f)).second) hosts.push_back({f, hn});
  };
  std::vector<EdgeRef> missing;
  for (int u = 0; u < hn; ++u)
    for (int v = u + 1; v < hn; ++v)
      if (!h.adjacent(u, v)) missing.push_back({u, v});
  offer(h);
  const int extra = std::min(opts.extra_edges, 2);
  for (std::size_t i = 0; extra >= 1 && i < missing.size(); ++i) {
    offer(GraphBuilder(h).add_edge(missing[i].u, missing[i].v).build());
    for (std::size_t j = i + 1; extra >= 2 && j < missing.size(); ++j) {
      offer(GraphBuilder(h).add_edge(missing[i].u, missing[i].v).add_edge(missing[j].u, missing[j].v).build());
    }
  }
  if (opts.extra_vertex && hn + 1 <= max_order) {
    for (int u = 0; u < hn; ++u) {
      for (int v = u + 1; v < hn; ++v) {
        GraphBuilder b(hn + 1);
        for (auto e : h.edges()) b.add_edge(e.u, e.v);
        b.add_edge(u, hn).add_edge(v, hn);
        offer(b.build());
      }
    }
  }

  SplitReport rep;
  rep.supergraphs = static_cast<int>(hosts.size());
  for (const auto& [f, members] : hosts) {
    std::set<Graph> done;
    for (int u = 0; u < f.order(); ++u) {
      for (const Graph& fp : vertex_splits(f, u)) {
        if (!is_2_connected(fp)) continue;
        ++rep.splits;
        if (has_cycle_at_least(fp, k)) continue;
        ++rep.qualifying;
        if (u >= members) ++rep.base_case;
        Graph canon = canonical_form(fp);
        if (!done.insert(canon).second) continue;
        if (!contains_family_union(fp, k)) rep.violations.push_back(fp);
      }
    }
  }
  return rep;
}

}  // namespace egstab
