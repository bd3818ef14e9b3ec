#include "egstab/recognizers.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "egstab/structure.hpp"

namespace egstab {

namespace {

// Calls f(subset) for every `size`-subset of `universe` in increasing numeric
// (colex) order; stops early when f returns true.
template <class F>
bool for_each_subset(VertexSet universe, int size, F&& f) {
  std::vector<int> pos = to_vector(universe);
  const int m = static_cast<int>(pos.size());
  if (size < 0 || size > m) return false;
  if (size == 0) return f(VertexSet{0});
  std::uint64_t comb = first_n(size);
  while (comb < (std::uint64_t{1} << m)) {
    VertexSet s = 0;
    for_each_vertex(comb, [&](int i) { s |= bit(pos[i]); });
    if (f(s)) return true;
    std::uint64_t c = comb & (~comb + 1);
    std::uint64_t r = comb + c;
    comb = (((r ^ comb) >> 2) / c) | r;
  }
  return false;
}

// A triangle or a P4 inside `rest`, as a vertex set; 0 when G[rest] is a star forest.
VertexSet obstruction(const Graph& g, VertexSet rest) {
  VertexSet found = 0;
  for_each_vertex(rest, [&](int v) {
    if (found) return;
    VertexSet nv = g.neighbors(v) & rest;
    if (count(nv) < 2) return;
    for_each_vertex(nv, [&](int u) {
      if (found) return;
      VertexSet inner = g.neighbors(u) & nv;
      if (inner) {
        found = bit(v) | bit(u) | bit(lowest(inner));
        return;
      }
      VertexSet further = g.neighbors(u) & rest & ~bit(v);
      if (further) {
        int w = lowest(nv & ~bit(u));
        found = bit(lowest(further)) | bit(u) | bit(v) | bit(w);
      }
    });
  });
  return found;
}

void collect_hitting(const Graph& g, VertexSet A, int budget, std::set<VertexSet>& out) {
  VertexSet obs = obstruction(g, g.vertices() & ~A);
  if (obs == 0) {
    out.insert(A);
    return;
  }
  if (budget == 0) return;
  for_each_vertex(obs, [&](int v) { collect_hitting(g, A | bit(v), budget - 1, out); });
}

struct StarComp {
  VertexSet S = 0;
  int center = -1;       // only for |S| >= 3
  VertexSet leaves = 0;  // only for |S| >= 3
  VertexSet nA = 0;      // A-neighbours of the whole component
  VertexSet leafA = 0;   // A-neighbours of the leaves
};

std::vector<StarComp> star_components(const Graph& g, VertexSet A) {
  std::vector<StarComp> out;
  VertexSet rest = g.vertices() & ~A;
  for (VertexSet S : components(g, rest)) {
    StarComp c;
    c.S = S;
    for_each_vertex(S, [&](int v) { c.nA |= g.neighbors(v) & A; });
    if (count(S) >= 3) {
      for_each_vertex(S, [&](int v) {
        if (count(g.neighbors(v) & S) >= 2) c.center = v;
      });
      c.leaves = S & ~bit(c.center);
      for_each_vertex(c.leaves, [&](int v) { c.leafA |= g.neighbors(v) & A; });
    }
    out.push_back(c);
  }
  return out;
}

bool subgraph_of(const Graph& g, const Graph& host) {
  if (g.order() != host.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) & ~host.neighbors(v)) return false;
  }
  return true;
}

std::vector<int> roles_from(VertexSet A, std::vector<int> first) {
  std::vector<int> out = first;
  for_each_vertex(A, [&](int v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  });
  return out;
}

ClassWitness make_witness(const ClassEntry& e, VertexSet A, Graph host) {
  ClassWitness w;
  w.label = e.label;
  w.family = e.family;
  w.k = e.k;
  w.t = e.t;
  w.A = A;
  w.host = std::move(host);
  return w;
}

// G1 / H_{n,k,a}: every edge meets A or lies inside C with |C| = k - 2a.
std::optional<ClassWitness> match_H(const Graph& g, const ClassEntry& e, VertexSet A) {
  const int n = g.order();
  const int a = count(A);
  const int csize = e.k - 2 * a;
  if (csize < 1 || n < e.k - a) return std::nullopt;
  VertexSet rest = g.vertices() & ~A;
  VertexSet busy = 0;
  for_each_vertex(rest, [&](int v) {
    if (g.neighbors(v) & rest) busy |= bit(v);
  });
  if (count(busy) > csize) return std::nullopt;
  VertexSet C = busy;
  for_each_vertex(rest & ~busy, [&](int v) {
    if (count(C) < csize) C |= bit(v);
  });
  GraphBuilder b(n);
  b.add_clique(A | C);
  b.add_complete_bipartite(A, rest & ~C);
  auto w = make_witness(e, A, b.build());
  w.roles = roles_from(A, {});
  return w;
}

std::optional<ClassWitness> match_G2(const Graph& g, const ClassEntry& e, VertexSet A) {
  VertexSet rest = g.vertices() & ~A;
  if (rest == 0) return std::nullopt;
  std::vector<int> candidates;
  VertexSet busy = 0;
  for_each_vertex(rest, [&](int v) {
    if (g.neighbors(v) & rest) busy |= bit(v);
  });
  if (busy == 0) {
    candidates.push_back(lowest(rest));
  } else {
    for_each_vertex(busy, [&](int v) {
      if (g.edges_within(rest & ~bit(v)) == 0) candidates.push_back(v);
    });
  }
  for (int b1 : candidates) {
    VertexSet J = g.neighbors(b1) & rest;
    VertexSet ja = 0;
    for_each_vertex(J, [&](int c) { ja |= g.neighbors(c) & A; });
    if (count(ja) > 1) continue;
    int a1 = ja ? lowest(ja) : lowest(A);
    VertexSet B = rest & ~J;
    GraphBuilder b(g.order());
    b.add_clique(A);
    b.add_complete_bipartite(A, B);
    b.add_complete_bipartite(J, bit(a1) | bit(b1));
    auto w = make_witness(e, A, b.build());
    w.b1 = b1;
    w.roles = roles_from(A, {a1});
    return w;
  }
  return std::nullopt;
}

// Adds the edge-maximal star on component c with centre joined to `center_to`.
void add_max_star(GraphBuilder& b, const StarComp& c, VertexSet center_to, int anchor) {
  if (count(c.S) <= 2) {
    b.add_clique(c.S);
    b.add_complete_bipartite(c.S, center_to);
    return;
  }
  b.add_complete_bipartite(bit(c.center), center_to);
  for_each_vertex(c.leaves, [&](int leaf) {
    b.add_edge(c.center, leaf);
    b.add_edge(leaf, anchor);
  });
}

std::optional<ClassWitness> match_G3(const Graph& g, const ClassEntry& e, VertexSet A) {
  if (count(A) < 2) return std::nullopt;
  auto comps = star_components(g, A);
  VertexSet U = 0;
  std::vector<StarComp> multi;
  std::vector<int> singles;
  for (const auto& c : comps) {
    if (count(c.S) == 1) {
      singles.push_back(lowest(c.S));
      continue;
    }
    if (count(c.leafA) > 1) return std::nullopt;
    U |= c.nA;
    multi.push_back(c);
  }
  if (count(U) > 2) return std::nullopt;
  std::optional<ClassWitness> result;
  for_each_subset(A & ~U, 2 - count(U), [&](VertexSet extra) {
    VertexSet Ap = U | extra;
    std::vector<int> free;
    for (int v : singles) {
      if ((g.neighbors(v) & ~Ap) == 0) free.push_back(v);
    }
    int need = std::max(0, 2 - static_cast<int>(multi.size()));
    if (static_cast<int>(free.size()) < 2 * need) return false;
    GraphBuilder b(g.order());
    b.add_clique(A);
    VertexSet paired = 0;
    for (int i = 0; i < need; ++i) {
      int u = free[2 * i];
      int v = free[2 * i + 1];
      paired |= bit(u) | bit(v);
      b.add_edge(u, v);
      b.add_complete_bipartite(bit(u) | bit(v), Ap);
    }
    VertexSet B = 0;
    for (int v : singles) {
      if (!contains(paired, v)) B |= bit(v);
    }
    b.add_complete_bipartite(A, B);
    for (const auto& c : multi) {
      int anchor = c.leafA ? lowest(c.leafA) : lowest(Ap);
      add_max_star(b, c, Ap, anchor);
    }
    auto w = make_witness(e, A, b.build());
    w.A_prime = Ap;
    w.roles = roles_from(A, to_vector(Ap));
    result = std::move(w);
    return true;
  });
  return result;
}

std::optional<ClassWitness> match_G4(const Graph& g, const ClassEntry& e, VertexSet A) {
  auto comps = star_components(g, A);
  GraphBuilder b(g.order());
  b.add_clique(A);
  for (const auto& c : comps) {
    if (count(c.leafA) > 1) return std::nullopt;
    int anchor = c.leafA ? lowest(c.leafA) : lowest(A);
    add_max_star(b, c, A, anchor);
  }
  auto w = make_witness(e, A, b.build());
  w.roles = roles_from(A, {});
  return w;
}

// Shared by G5..G8: each component gets a pair P with nA, leafA inside it.
struct PairedComp {
  StarComp comp;
  VertexSet pair = 0;
};

std::optional<Graph> bridge_host(const Graph& g, VertexSet A, const std::vector<PairedComp>& parts,
                                 const std::vector<std::pair<int, int>>& merges) {
  GraphBuilder b(g.order());
  b.add_clique(A);
  for (const auto& p : parts) {
    if ((p.comp.nA & ~p.pair) || (p.comp.leafA & ~p.pair) || count(p.comp.leafA) > 1) return std::nullopt;
    int anchor = p.comp.leafA ? lowest(p.comp.leafA) : lowest(p.pair);
    add_max_star(b, p.comp, p.pair, anchor);
  }
  for (auto [u, v] : merges) b.add_edge(u, v);
  Graph host = b.build();
  if (has_cycle_at_least(host, 8)) return std::nullopt;
  return host;
}

VertexSet pad_pair(VertexSet need, VertexSet must, VertexSet A) {
  VertexSet p = need | must;
  VertexSet spare = A & ~p;
  while (count(p) < 2 && spare) {
    p |= bit(lowest(spare));
    spare &= spare - 1;
  }
  return p;
}

std::optional<ClassWitness> match_G5(const Graph& g, const ClassEntry& e, VertexSet A) {
  auto comps = star_components(g, A);
  for (int a1 : to_vector(A)) {
    std::vector<PairedComp> parts;
    bool ok = true;
    for (const auto& c : comps) {
      VertexSet p = pad_pair(c.nA | c.leafA, bit(a1), A);
      if (count(p) != 2) {
        ok = false;
        break;
      }
      parts.push_back({c, p});
    }
    if (!ok) continue;
    if (auto host = bridge_host(g, A, parts, {})) {
      auto w = make_witness(e, A, *host);
      w.roles = roles_from(A, {a1});
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ClassWitness> match_G8(const Graph& g, const ClassEntry& e, VertexSet A) {
  auto comps = star_components(g, A);
  VertexSet U = 0;
  for (const auto& c : comps) U |= c.nA | c.leafA;
  if (count(U) > 2) return std::nullopt;
  std::optional<ClassWitness> result;
  for_each_subset(A & ~U, 2 - count(U), [&](VertexSet extra) {
    VertexSet P = U | extra;
    std::vector<PairedComp> parts;
    for (const auto& c : comps) parts.push_back({c, P});
    if (auto host = bridge_host(g, A, parts, {})) {
      auto w = make_witness(e, A, *host);
      w.roles = roles_from(A, to_vector(P));
      result = std::move(w);
      return true;
    }
    return false;
  });
  return result;
}

std::optional<ClassWitness> match_G6_G7(const Graph& g, const ClassEntry& e, VertexSet A, G6Reading reading) {
  auto comps = star_components(g, A);
  VertexSet U = 0;
  for (const auto& c : comps) {
    if (count(c.S) >= 2) U |= c.nA | c.leafA;
  }
  if (count(U) > 2) return std::nullopt;
  const bool g7 = e.family == Family::G7;
  std::optional<ClassWitness> result;
  for_each_subset(A & ~U, 2 - count(U), [&](VertexSet extra) {
    VertexSet P = U | extra;
    VertexSet Q = A & ~P;
    for (int a1 : to_vector(P)) {
      std::vector<PairedComp> parts;
      std::vector<std::pair<int, int>> merges;
      std::vector<int> to_pair;
      bool ok = true;
      int with_a1 = 0;
      int isolated = 0;
      for (const auto& c : comps) {
        if (count(c.S) >= 2) {
          parts.push_back({c, P});
          continue;
        }
        if (g7) {
          if ((c.nA & ~Q) == 0) {
            parts.push_back({c, Q});
          } else if ((c.nA & ~P) == 0) {
            to_pair.push_back(lowest(c.S));
            parts.push_back({c, P});
          } else {
            ok = false;
          }
        } else {
          VertexSet p = pad_pair(c.nA, count(c.nA) < 2 ? bit(a1) : 0, A);
          if (count(p) != 2) ok = false;
          ++isolated;
          if (contains(p, a1)) ++with_a1;
          parts.push_back({c, p});
        }
      }
      if (!ok) continue;
      if (g7) {
        if (to_pair.size() % 2 != 0) continue;
        for (std::size_t i = 0; i < to_pair.size(); i += 2) merges.emplace_back(to_pair[i], to_pair[i + 1]);
      } else {
        bool reading_ok = reading == G6Reading::Weak ? with_a1 >= 1 : with_a1 == isolated;
        if (!reading_ok) continue;
      }
      if (auto host = bridge_host(g, A, parts, merges)) {
        auto w = make_witness(e, A, *host);
        int a2 = lowest(P & ~bit(a1));
        w.roles = roles_from(A, {a1, a2});
        result = std::move(w);
        return true;
      }
    }
    return false;
  });
  return result;
}

int clique_size(const ClassEntry& e) {
  switch (e.family) {
    case Family::G4:
    case Family::G5: return 3;
    case Family::G6:
    case Family::G7: return 4;
    case Family::G8: return 5;
    default: return e.t;
  }
}

}  // namespace

bool is_star_forest_after_removing(const Graph& g, VertexSet removed) {
  return obstruction(g, g.vertices() & ~removed) == 0;
}

bool is_star_forest(const Graph& g) { return is_star_forest_after_removing(g, 0); }

std::vector<VertexSet> star_forest_deletion_sets(const Graph& g, int size) {
  if (size < 0 || size > g.order()) return {};
  std::set<VertexSet> minimal;
  collect_hitting(g, 0, size, minimal);
  std::set<VertexSet> all;
  for (VertexSet base : minimal) {
    for_each_subset(g.vertices() & ~base, size - count(base), [&](VertexSet extra) {
      all.insert(base | extra);
      return false;
    });
  }
  return {all.begin(), all.end()};
}

std::optional<ClassWitness> star_forest_witness(const Graph& g, int budget) {
  for (int s = 0; s <= std::min(budget, g.order()); ++s) {
    auto sets = star_forest_deletion_sets(g, s);
    if (!sets.empty()) {
      ClassWitness w;
      w.label = "star-forest";
      w.t = s;
      w.A = sets.front();
      w.roles = to_vector(w.A);
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ClassWitness> embeds_in_H(const Graph& g, int k, int a) {
  if (a < 1 || 2 * a >= k) throw ParameterError("embeds_in_H needs 1 <= a < k/2");
  ClassEntry e{Family::H, k, a, "H(n," + std::to_string(k) + "," + std::to_string(a) + ")"};
  std::optional<ClassWitness> out;
  for_each_subset(g.vertices(), a, [&](VertexSet A) {
    out = match_H(g, e, A);
    return out.has_value();
  });
  return out;
}

std::vector<ClassEntry> class_list(int k, const ClassifyOptions& opts) {
  const int t = t_of(k);
  auto g = [&](Family f, int kk, int tt) {
    return ClassEntry{f, kk, tt, family_name(f) + "(n," + std::to_string(kk) + ")"};
  };
  if (k <= 4) return {};
  if (k == 5) return {g(Family::G1, 5, 2)};
  if (k == 6) return {g(Family::G1, 6, 2), g(Family::G2, 6, 2)};
  if (k == 7) {
    std::vector<ClassEntry> out{{Family::H, 7, 3, "H(n,7,3)"}};
    const int it = opts.k7_inner_t;
    if (2 * it < 6) out.push_back(g(Family::G1, 6, it));
    out.push_back(g(Family::G2, 6, it));
    out.push_back(g(Family::G3, 6, it));
    return out;
  }
  if (k == 8) {
    return {g(Family::G1, 8, 3), g(Family::G2, 8, 3), g(Family::G3, 8, 3), g(Family::G5, 8, 3),
            g(Family::G6, 8, 3), g(Family::G7, 8, 3), g(Family::G8, 8, 3)};
  }
  if (k % 2 == 1) return {g(Family::G1, k, t)};
  std::vector<ClassEntry> out{g(Family::G1, k, t), g(Family::G2, k, t), g(Family::G3, k, t)};
  if (k == 10) out.push_back(g(Family::G4, 10, 3));
  return out;
}

std::optional<ClassWitness> match_class(const Graph& g, const ClassEntry& entry, G6Reading g6) {
  const int s = clique_size(entry);
  if (s < 1 || s > g.order()) return std::nullopt;
  for (VertexSet A : star_forest_deletion_sets(g, s)) {
    std::optional<ClassWitness> w;
    switch (entry.family) {
      case Family::H:
      case Family::G1: w = match_H(g, entry, A); break;
      case Family::G2: w = match_G2(g, entry, A); break;
      case Family::G3: w = match_G3(g, entry, A); break;
      case Family::G4: w = match_G4(g, entry, A); break;
      case Family::G5: w = match_G5(g, entry, A); break;
      case Family::G6:
      case Family::G7: w = match_G6_G7(g, entry, A, g6); break;
      case Family::G8: w = match_G8(g, entry, A); break;
      default: throw ParameterError(family_name(entry.family) + " is not a stability class");
    }
    if (w) return w;
  }
  return std::nullopt;
}

std::string verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::BelowBound: return "below-bound";
    case VerdictKind::ClassMember: return "class-member";
    case VerdictKind::Violation: return "violation";
  }
  return "?";
}

StabilityVerdict classify_stability(const Graph& g, int k, const ClassifyOptions& opts) {
  if (k < 4) throw ParameterError("classify_stability needs k >= 4");
  if (opts.check_preconditions) {
    if (g.order() < k) throw ParameterError("classify_stability needs n >= k");
    if (!is_2_connected(g)) throw ParameterError("classify_stability needs a 2-connected graph");
    if (has_cycle_at_least(g, k)) throw ParameterError("classify_stability needs c(G) < k");
  }
  StabilityVerdict v;
  v.edges = g.size();
  if (k >= 7) v.threshold = h_value(g.order(), k, t_of(k) - 1);
  for (const auto& entry : class_list(k, opts)) {
    if (auto w = match_class(g, entry, opts.g6)) {
      v.kind = VerdictKind::ClassMember;
      v.witness = std::move(w);
      return v;
    }
  }
  v.kind = (v.threshold && v.edges <= *v.threshold) ? VerdictKind::BelowBound : VerdictKind::Violation;
  return v;
}

bool verify_witness(const Graph& g, const ClassWitness& w) {
  if (!subgraph_of(g, w.host)) return false;
  ClassEntry e{w.family, w.k, w.t, w.label};
  if (count(w.A) != clique_size(e)) return false;
  return w.host.edges_within(w.A) == count(w.A) * (count(w.A) - 1) / 2;
}

bool is_j3_bridge(const Graph& g, VertexSet S, int a1, int a2) {
  const VertexSet Ap = bit(a1) | bit(a2);
  if (a1 == a2 || (S & Ap) || S == 0) return false;
  if (reachable(g, lowest(S), S) != S) return false;
  if (!separates(g, Ap)) return false;
  auto sub = induced(g, S | Ap);
  int i1 = static_cast<int>(std::find(sub.original.begin(), sub.original.end(), a1) - sub.original.begin());
  int i2 = static_cast<int>(std::find(sub.original.begin(), sub.original.end(), a2) - sub.original.begin());
  GraphBuilder closed(sub.graph);
  closed.add_edge(i1, i2);
  if (!is_2_connected(closed.build())) return false;
  auto p = longest_xy_path(sub.graph, i1, i2);
  return p.found && p.length == 3;
}

namespace {

void describe_star(const Graph& g, Bridge& br, VertexSet X) {
  if (count(br.S) < 3) return;
  int center = -1;
  int centers = 0;
  for_each_vertex(br.S, [&](int v) {
    if (count(g.neighbors(v) & br.S) >= 2) {
      center = v;
      ++centers;
    }
  });
  if (centers != 1 || g.edges_within(br.S) != count(br.S) - 1) return;
  br.center = center;
  VertexSet common = X;
  for_each_vertex(br.S & ~bit(center), [&](int leaf) { common &= g.neighbors(leaf); });
  if (count(common) == 1) br.anchor = lowest(common);
}

}  // namespace

BridgeDecomposition j3_bridges(const Graph& g, VertexSet a_prime) {
  if (count(a_prime) != 2 || (a_prime & ~g.vertices())) throw ParameterError("j3_bridges needs a 2-vertex set");
  BridgeDecomposition out;
  out.X = a_prime;
  const int a1 = lowest(a_prime);
  const int a2 = lowest(a_prime & ~bit(a1));
  for (VertexSet S : components(g, g.vertices() & ~a_prime)) {
    Bridge br;
    br.S = S;
    for_each_vertex(S, [&](int v) { br.attachments |= g.neighbors(v) & a_prime; });
    if (count(S) == 1) br.kind = BridgeKind::Singleton;
    else br.kind = is_j3_bridge(g, S, a1, a2) ? BridgeKind::J3 : BridgeKind::Other;
    describe_star(g, br, a_prime);
    out.bridges.push_back(br);
  }
  return out;
}

BridgeDecomposition cycle_bridges(const Graph& g, const std::vector<int>& cycle) {
  BridgeDecomposition out;
  out.cycle = cycle;
  out.X = to_set(cycle);
  for (VertexSet S : components(g, g.vertices() & ~out.X)) {
    Bridge br;
    br.S = S;
    for_each_vertex(S, [&](int v) { br.attachments |= g.neighbors(v) & out.X; });
    if (count(S) == 1) {
      br.kind = BridgeKind::Singleton;
    } else if (count(br.attachments) == 2) {
      int x = lowest(br.attachments);
      int y = lowest(br.attachments & ~bit(x));
      br.kind = is_j3_bridge(g, S, x, y) ? BridgeKind::J3 : BridgeKind::Other;
    }
    describe_star(g, br, out.X);
    out.bridges.push_back(br);
  }
  return out;
}

int BridgeDecomposition::cycle_distance(int u, int v) const {
  auto iu = std::find(cycle.begin(), cycle.end(), u);
  auto iv = std::find(cycle.begin(), cycle.end(), v);
  if (iu == cycle.end() || iv == cycle.end()) throw ParameterError("vertex not on the cycle");
  int d = static_cast<int>(std::abs(iu - iv));
  return std::min(d, static_cast<int>(cycle.size()) - d);
}

int longest_path_through(const Graph& g, int x, int y, VertexSet S) {
  auto prof = path_length_profile(g, x, S | bit(x) | bit(y));
  std::uint64_t lens = prof[y] & ~std::uint64_t{3};
  return lens ? 63 - std::countl_zero(lens) : -1;
}

std::vector<std::vector<int>> all_longest_cycles(const Graph& g) {
  const int c = circumference(g);
  std::vector<std::vector<int>> out;
  if (c == 0) return out;
  const int n = g.order();
  std::vector<int> path;
  auto dfs = [&](auto&& self, int v, VertexSet visited, int s) -> void {
    if (static_cast<int>(path.size()) == c) {
      if (g.adjacent(v, s) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for_each_vertex(g.neighbors(v) & ~visited & ~first_n(s + 1), [&](int w) {
      path.push_back(w);
      self(self, w, visited | bit(w), s);
      path.pop_back();
    });
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    dfs(dfs, s, bit(s), s);
  }
  return out;
}

bool property_W(const Graph& h, int ell) {
  if (ell < 3) throw ParameterError("property W needs l >= 3");
  for (int z = 0; z < h.order(); ++z) {
    VertexSet nz = h.neighbors(z);
    if (nz == 0) return false;
    VertexSet rest = h.vertices() & ~bit(z);
    // closes[w2] = neighbours w of z with a w2..w path on l-1 vertices avoiding z.
    std::vector<VertexSet> closes(h.order(), 0);
    for_each_vertex(nz, [&](int w2) {
      auto prof = path_length_profile(h, w2, rest);
      for_each_vertex(nz & ~bit(w2), [&](int w) {
        if ((prof[w] >> (ell - 2)) & 1U) closes[w2] |= bit(w);
      });
    });
    bool anchored = false;
    for_each_vertex(nz, [&](int w) {
      if (anchored) return;
      bool all = true;
      for_each_vertex(nz & ~bit(w), [&](int w2) { all = all && contains(closes[w2], w); });
      anchored = all;
    });
    if (!anchored) return false;
  }
  return true;
}

namespace {

// The `size` vertices of `pool` with the most neighbours in A (ties: lower label).
std::pair<VertexSet, int> best_side(const Graph& g, VertexSet A, VertexSet pool, int size) {
  std::vector<std::pair<int, int>> ranked;
  for_each_vertex(pool, [&](int v) { ranked.push_back({-g.degree_into(v, A), v}); });
  if (static_cast<int>(ranked.size()) < size) return {0, -1};
  std::sort(ranked.begin(), ranked.end());
  VertexSet B = 0;
  int edges = 0;
  for (int i = 0; i < size; ++i) {
    B |= bit(ranked[i].second);
    edges -= ranked[i].first;
  }
  return {B, edges};
}

std::optional<FamilyEmbedding> find_bipartite(const Graph& g, Family fam, int t, int bsize, int budget) {
  std::optional<FamilyEmbedding> out;
  const int need = t * bsize - std::max(budget, 0);
  for_each_subset(g.vertices(), t, [&](VertexSet A) {
    auto [B, e] = best_side(g, A, g.vertices() & ~A, bsize);
    if (e >= need) {
      out = FamilyEmbedding{fam, A, B};
      return true;
    }
    return false;
  });
  return out;
}

std::optional<FamilyEmbedding> find_F2(const Graph& g, int t) {
  std::optional<FamilyEmbedding> out;
  const int need = t * (t + 2) - 1 - std::max(t - 4, 0);
  for_each_subset(g.vertices(), t, [&](VertexSet A) {
    for (int c1 = 0; c1 < g.order() && !out; ++c1) {
      if (contains(A, c1)) continue;
      for (int a1 : to_vector(g.neighbors(c1) & A)) {
        for (int b1 : to_vector(g.neighbors(c1) & ~A)) {
          VertexSet pool = g.vertices() & ~A & ~bit(c1) & ~bit(b1);
          auto [B, e] = best_side(g, A, pool, t + 1);
          if (e < 0) continue;
          int total = e + g.degree_into(b1, A) - (g.adjacent(a1, b1) ? 1 : 0);
          if (total >= need) {
            out = FamilyEmbedding{Family::F2, A, B | bit(b1), a1, b1, c1};
            return true;
          }
        }
      }
    }
    return out.has_value();
  });
  return out;
}

bool disjoint_pairs(VertexSet n1, VertexSet n2, int size) {
  return count(n1) >= size && count(n2) >= size && count(n1 | n2) >= 2 * size;
}

std::optional<FamilyEmbedding> find_F3(const Graph& g, int t) {
  std::optional<FamilyEmbedding> out;
  const int need = t * t - std::max(t - 4, 0);
  for (auto e : g.edges()) {
    VertexSet pool = g.vertices() & ~bit(e.u) & ~bit(e.v);
    for_each_subset(pool, t, [&](VertexSet A) {
      if (!disjoint_pairs(g.neighbors(e.u) & A, g.neighbors(e.v) & A, 2)) return false;
      auto [B, cnt] = best_side(g, A, pool & ~A, t);
      if (cnt >= need) {
        out = FamilyEmbedding{Family::F3, A, B, -1, -1, e.u, e.v};
        return true;
      }
      return false;
    });
    if (out) break;
  }
  return out;
}

bool has_matching3(const Graph& g, VertexSet pool, VertexSet& picked) {
  auto rec = [&](auto&& self, VertexSet left, int need, VertexSet chosen) -> bool {
    if (need == 0) {
      picked = chosen;
      return true;
    }
    while (left) {
      int u = lowest(left);
      left &= ~bit(u);
      for (int v : to_vector(g.neighbors(u) & left)) {
        if (self(self, left & ~bit(v), need - 1, chosen | bit(u) | bit(v))) return true;
      }
    }
    return false;
  };
  return rec(rec, pool, 3, 0);
}

std::optional<FamilyEmbedding> find_F4(const Graph& g) {
  std::optional<FamilyEmbedding> out;
  for_each_subset(g.vertices(), 3, [&](VertexSet A) {
    VertexSet common = g.vertices() & ~A;
    for_each_vertex(A, [&](int a) { common &= g.neighbors(a); });
    VertexSet picked = 0;
    if (count(common) >= 6 && has_matching3(g, common, picked)) {
      out = FamilyEmbedding{Family::F4, A, picked};
      return true;
    }
    return false;
  });
  return out;
}

std::optional<FamilyEmbedding> find_F4_prime(const Graph& g) {
  std::optional<FamilyEmbedding> out;
  for (auto e : g.edges()) {
    VertexSet pool = g.vertices() & ~bit(e.u) & ~bit(e.v);
    VertexSet both = g.neighbors(e.u) & g.neighbors(e.v) & pool;
    if (count(both) < 3) continue;
    for_each_subset(pool, 4, [&](VertexSet A) {
      if (count(both & A) < 3) return false;
      auto [B, cnt] = best_side(g, A, pool & ~A, 4);
      if (cnt >= 16) {
        out = FamilyEmbedding{Family::F4Prime, A, B, -1, -1, e.u, e.v};
        return true;
      }
      return false;
    });
    if (out) break;
  }
  return out;
}

}  // namespace

std::optional<FamilyEmbedding> contains_family_member(const Graph& g, Family family, int t) {
  if (t < 2) throw ParameterError("family parameter t must be at least 2");
  switch (family) {
    case Family::F0: return find_bipartite(g, Family::F0, t, t + 1, t - 3);
    case Family::F1: return find_bipartite(g, Family::F1, t, t + 2, t - 4);
    case Family::F2: return find_F2(g, t);
    case Family::F3: return find_F3(g, t);
    case Family::F4:
      if (t != 4) return std::nullopt;
      return find_F4(g);
    case Family::F4Prime:
      if (t != 4) return std::nullopt;
      return find_F4_prime(g);
    default: throw ParameterError(family_name(family) + " is not an F-family");
  }
}

std::optional<FamilyEmbedding> contains_family_union(const Graph& g, int k) {
  const int t = t_of(k);
  if (k % 2 == 1) return contains_family_member(g, Family::F0, t);
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4, Family::F4Prime}) {
    if (auto e = contains_family_member(g, f, t)) return e;
  }
  return std::nullopt;
}

}  // namespace egstab
