#include "egstab/structure.hpp"

#include <algorithm>
#include <bit>

namespace egstab {

namespace {

class Ticker {
 public:
  explicit Ticker(Deadline d) : deadline_(d) {}
  void tick() {
    if (deadline_ && (++nodes_ & 4095U) == 0 && Clock::now() > *deadline_) throw DeadlineExceeded();
  }

 private:
  Deadline deadline_;
  unsigned nodes_ = 0;
};

bool use_dp(const Graph& g, Solver s) {
  if (s == Solver::Auto) return g.order() <= kSubsetDpLimit;
  return s == Solver::SubsetDp;
}

void require_dp_size(int n) {
  if (n > 26) throw GraphError("subset DP limited to 26 vertices");
}

// Walks back through a subset table to recover the vertex sequence ending at v.
std::vector<int> unwind(const Graph& g, const std::vector<VertexSet>& dp, VertexSet mask, int v) {
  std::vector<int> seq{v};
  while (count(mask) > 1) {
    VertexSet prev = mask & ~bit(v);
    int u = lowest(dp[prev] & g.neighbors(v));
    seq.push_back(u);
    mask = prev;
    v = u;
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

CycleResult longest_cycle_dp(const Graph& g, Ticker& ticker) {
  const int n = g.order();
  require_dp_size(n);
  std::vector<VertexSet> dp(std::size_t{1} << n, 0);
  for (int s = 0; s < n; ++s) dp[bit(s)] = bit(s);
  int best = 0;
  VertexSet best_mask = 0;
  int best_end = -1;
  for (VertexSet mask = 1; mask < (VertexSet{1} << n); ++mask) {
    VertexSet ends = dp[mask];
    if (ends == 0) continue;
    ticker.tick();
    const int s = lowest(mask);
    const int size = count(mask);
    for_each_vertex(ends, [&](int v) {
      if (size >= 3 && size > best && g.adjacent(v, s)) {
        best = size;
        best_mask = mask;
        best_end = v;
      }
      for_each_vertex(g.neighbors(v) & ~mask & ~first_n(s + 1),
                      [&](int w) { dp[mask | bit(w)] |= bit(w); });
    });
  }
  CycleResult out;
  out.length = best;
  if (best > 0) out.cycle = unwind(g, dp, best_mask, best_end);
  return out;
}

struct CycleSearch {
  const Graph& g;
  Ticker& ticker;
  int stop_at;
  int start = 0;
  VertexSet allowed = 0;
  int best = 0;
  std::vector<int> path, best_cycle;

  void dfs(int v, VertexSet visited) {
    ticker.tick();
    const int len = static_cast<int>(path.size());
    if (len >= 3 && len > best && g.adjacent(v, start)) {
      best = len;
      best_cycle = path;
    }
    if (best >= stop_at) return;
    VertexSet avail = allowed & ~visited;
    VertexSet reach = reachable(g, v, avail | bit(v)) & avail;
    if (len + count(reach) <= best) return;
    if (len >= 2 && ((g.neighbors(start) & (reach | bit(v))) == 0)) return;
    for_each_vertex(g.neighbors(v) & avail, [&](int w) {
      if (best >= stop_at) return;
      path.push_back(w);
      dfs(w, visited | bit(w));
      path.pop_back();
    });
  }
};

CycleResult longest_cycle_bb(const Graph& g, Ticker& ticker, int stop_at) {
  const int n = g.order();
  CycleSearch cs{g, ticker, stop_at, 0, 0, 0, {}, {}};
  for (int s = 0; s < n && cs.best < stop_at; ++s) {
    cs.allowed = g.vertices() & ~first_n(s);
    if (count(cs.allowed) <= cs.best) break;
    cs.start = s;
    cs.path = {s};
    cs.dfs(s, bit(s));
  }
  return {cs.best, cs.best_cycle};
}

struct PathSearch {
  const Graph& g;
  Ticker& ticker;
  int target;
  int best = -1;
  std::vector<int> path, best_path;

  void dfs(int v, VertexSet visited) {
    ticker.tick();
    const int len = static_cast<int>(path.size()) - 1;
    if (v == target) {
      if (len > best) {
        best = len;
        best_path = path;
      }
      return;
    }
    VertexSet avail = g.vertices() & ~visited;
    VertexSet reach = reachable(g, v, avail | bit(v)) & avail;
    if (!contains(reach, target) || len + count(reach) <= best) return;
    for_each_vertex(g.neighbors(v) & avail, [&](int w) {
      path.push_back(w);
      dfs(w, visited | bit(w));
      path.pop_back();
    });
  }
};

}  // namespace

VertexSet reachable(const Graph& g, int from, VertexSet within) {
  VertexSet seen = bit(from);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (left != 0) {
    VertexSet c = reachable(g, lowest(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) {
  return g.order() == 0 || reachable(g, 0, g.vertices()) == g.vertices();
}

bool separates(const Graph& g, VertexSet removed) {
  VertexSet rest = g.vertices() & ~removed;
  if (rest == 0) return false;
  return reachable(g, lowest(rest), rest) != rest;
}

bool is_2_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return cut_vertices(g) == 0;
}

bool is_3_connected(const Graph& g) {
  if (g.order() < 4 || !is_2_connected(g)) return false;
  return separating_pairs(g).empty();
}

VertexSet cut_vertices(const Graph& g) {
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (separates(g, bit(v))) out |= bit(v);
  }
  return out;
}

std::vector<std::pair<int, int>> separating_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (separates(g, bit(u) | bit(v))) out.emplace_back(u, v);
    }
  }
  return out;
}

CycleResult longest_cycle(const Graph& g, Solver solver, Deadline deadline) {
  Ticker ticker(deadline);
  if (use_dp(g, solver)) return longest_cycle_dp(g, ticker);
  return longest_cycle_bb(g, ticker, g.order());
}

int circumference(const Graph& g, Solver solver, Deadline deadline) {
  return longest_cycle(g, solver, deadline).length;
}

bool has_cycle_at_least(const Graph& g, int k, Deadline deadline) {
  if (k > g.order()) return false;
  Ticker ticker(deadline);
  if (g.order() <= kSubsetDpLimit) return longest_cycle_dp(g, ticker).length >= k;
  return longest_cycle_bb(g, ticker, std::max(k, 3)).length >= k;
}

PathQueryResult longest_xy_path(const Graph& g, int x, int y, Solver solver, Deadline deadline) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw GraphError("longest_xy_path needs distinct endpoints");
  Ticker ticker(deadline);
  PathQueryResult out;
  if (use_dp(g, solver)) {
    const int n = g.order();
    require_dp_size(n);
    std::vector<VertexSet> dp(std::size_t{1} << n, 0);
    dp[bit(x)] = bit(x);
    VertexSet best_mask = 0;
    for (VertexSet mask = bit(x); mask < (VertexSet{1} << n); ++mask) {
      VertexSet ends = dp[mask];
      if (ends == 0) continue;
      ticker.tick();
      if (contains(ends, y) && count(mask) > count(best_mask)) best_mask = mask;
      for_each_vertex(ends & ~bit(y), [&](int v) {
        for_each_vertex(g.neighbors(v) & ~mask, [&](int w) { dp[mask | bit(w)] |= bit(w); });
      });
    }
    if (best_mask != 0) {
      out.found = true;
      out.length = count(best_mask) - 1;
      out.witness = unwind(g, dp, best_mask, y);
    }
    return out;
  }
  PathSearch ps{g, ticker, y, -1, {}, {}};
  ps.path = {x};
  ps.dfs(x, bit(x));
  if (ps.best >= 0) {
    out.found = true;
    out.length = ps.best;
    out.witness = ps.best_path;
  }
  return out;
}

PathQueryResult longest_path(const Graph& g) {
  const int n = g.order();
  PathQueryResult out;
  if (n == 0) return out;
  require_dp_size(n);
  std::vector<VertexSet> dp(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) dp[bit(v)] = bit(v);
  VertexSet best_mask = 0;
  int best_end = -1;
  for (VertexSet mask = 1; mask < (VertexSet{1} << n); ++mask) {
    VertexSet ends = dp[mask];
    if (ends == 0) continue;
    if (count(mask) > count(best_mask)) {
      best_mask = mask;
      best_end = lowest(ends);
    }
    for_each_vertex(ends, [&](int v) {
      for_each_vertex(g.neighbors(v) & ~mask, [&](int w) { dp[mask | bit(w)] |= bit(w); });
    });
  }
  out.found = true;
  out.length = count(best_mask) - 1;
  out.witness = unwind(g, dp, best_mask, best_end);
  return out;
}

std::vector<std::uint64_t> path_length_profile(const Graph& g, int x, VertexSet allowed) {
  g.require_vertex(x);
  if (!contains(allowed, x)) throw GraphError("start vertex outside the allowed set");
  allowed &= g.vertices();
  auto sub = induced(g, allowed);
  const int m = sub.graph.order();
  require_dp_size(m);
  int sx = static_cast<int>(std::find(sub.original.begin(), sub.original.end(), x) - sub.original.begin());
  std::vector<VertexSet> dp(std::size_t{1} << m, 0);
  dp[bit(sx)] = bit(sx);
  std::vector<std::uint64_t> local(m, 0);
  for (VertexSet mask = bit(sx); mask < (VertexSet{1} << m); ++mask) {
    VertexSet ends = dp[mask];
    if (ends == 0) continue;
    const int len = count(mask) - 1;
    for_each_vertex(ends, [&](int v) {
      local[v] |= std::uint64_t{1} << len;
      for_each_vertex(sub.graph.neighbors(v) & ~mask, [&](int w) { dp[mask | bit(w)] |= bit(w); });
    });
  }
  std::vector<std::uint64_t> out(g.order(), 0);
  for (int i = 0; i < m; ++i) out[sub.original[i]] = local[i];
  return out;
}

int longest_cycle_through_edge(const Graph& g, EdgeRef e) {
  g.require_edge(e);
  auto without = GraphBuilder(g).remove_edge(e.u, e.v).build();
  auto prof = path_length_profile(without, e.u, g.vertices());
  std::uint64_t lens = prof[e.v] & ~std::uint64_t{3};
  if (lens == 0) return 0;
  return 64 - std::countl_zero(lens);
}

bool cycle_through_path_of_length(const Graph& g, int w, int z, int w2, int len) {
  if (w == w2 || !g.adjacent(w, z) || !g.adjacent(z, w2) || len < 3 || len > g.order()) return false;
  auto prof = path_length_profile(g, w2, g.vertices() & ~bit(z));
  return (prof[w] >> (len - 2)) & 1U;
}

namespace {

struct HamSearch {
  const Graph& g;
  std::vector<VertexSet> forced;
  int n;
  std::vector<int> path;

  bool extend(int v, int prev, VertexSet visited) {
    if (count(visited) == n) {
      if (!g.adjacent(v, 0)) return false;
      if (forced[v] & ~bit(prev) & ~bit(0)) return false;
      return (forced[0] & ~bit(path[1]) & ~bit(v)) == 0;
    }
    VertexSet need = forced[v] & ~(prev >= 0 ? bit(prev) : 0);
    VertexSet options = g.neighbors(v) & ~visited;
    if (prev < 0) {
      // The start keeps one forced edge for the closing step.
      if (count(need) > 2) return false;
      if (need != 0) options &= bit(lowest(need));
    } else {
      if (count(need) > 1) return false;
      if (need != 0) {
        if (!contains(options, lowest(need))) return false;
        options = need;
      }
    }
    bool ok = false;
    for_each_vertex(options, [&](int w) {
      if (ok) return;
      if (count(forced[w]) == 2 && !contains(forced[w], v)) return;
      path.push_back(w);
      if (extend(w, v, visited | bit(w))) {
        ok = true;
        return;
      }
      path.pop_back();
    });
    return ok;
  }
};

}  // namespace

std::optional<std::vector<int>> hamiltonian_cycle_through(const Graph& g, std::span<const EdgeRef> forced) {
  const int n = g.order();
  if (n < 3) throw GraphError("hamiltonicity needs n >= 3");
  HamSearch hs{g, std::vector<VertexSet>(n, 0), n, {0}};
  for (auto e : forced) {
    g.require_edge(e);
    hs.forced[e.u] |= bit(e.v);
    hs.forced[e.v] |= bit(e.u);
  }
  for (int v = 0; v < n; ++v) {
    if (count(hs.forced[v]) > 2) return std::nullopt;
  }
  if (hs.extend(0, -1, bit(0))) return hs.path;
  return std::nullopt;
}

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g) {
  if (g.order() < 3) throw GraphError("hamiltonicity needs n >= 3");
  auto c = longest_cycle(g);
  if (c.length == g.order()) return c.cycle;
  return std::nullopt;
}

bool is_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw GraphError("hamiltonicity needs n >= 3");
  if (g.min_degree() < 2) return false;
  if (k_closure(g, n).size() == n * (n - 1) / 2) return true;
  return has_cycle_at_least(g, n);
}

Graph k_closure(const Graph& g, int k) {
  GraphBuilder b(g);
  auto deg = g.degrees();
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!b.adjacent(u, v) && deg[u] + deg[v] >= k) {
          b.add_edge(u, v);
          ++deg[u];
          ++deg[v];
          changed = true;
        }
      }
    }
  }
  return b.build();
}

int chvatal_index(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw GraphError("Chvatal index needs n >= 3");
  if (is_hamiltonian(g)) throw GraphError("Chvatal index is undefined for a hamiltonian graph");
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  for (int i = 1; 2 * i < n; ++i) {
    if (d[i - 1] <= i && d[n - i - 1] < n - i) return i;
  }
  throw std::logic_error("non-hamiltonian graph without a Chvatal index");
}

bool is_valid_path(const Graph& g, std::span<const int> path) {
  VertexSet seen = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    int v = path[i];
    if (v < 0 || v >= g.order() || contains(seen, v)) return false;
    seen |= bit(v);
    if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
  }
  return !path.empty();
}

bool is_valid_cycle(const Graph& g, std::span<const int> cycle) {
  return cycle.size() >= 3 && is_valid_path(g, cycle) && g.adjacent(cycle.front(), cycle.back());
}

}  // namespace egstab
