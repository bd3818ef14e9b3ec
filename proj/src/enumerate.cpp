#include "egstab/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "egstab/canon.hpp"
#include "egstab/structure.hpp"

namespace egstab {

std::uint64_t pack_small(const Graph& g) {
  if (g.order() > 11) throw GraphError("pack_small holds at most 11 vertices");
  std::uint64_t key = 0;
  for (auto e : g.edges()) key |= std::uint64_t{1} << (e.v * (e.v - 1) / 2 + e.u);
  return key;
}

Graph unpack_small(int n, std::uint64_t key) {
  GraphBuilder b(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((key >> (j * (j - 1) / 2 + i)) & 1) b.add_edge(i, j);
    }
  }
  return b.build();
}

namespace {

// Vertex invariant used to pick the deletion vertex.
std::pair<int, int> invariant(const Graph& g, int v) {
  int s = 0;
  for_each_vertex(g.neighbors(v), [&](int w) { s += g.degree(w); });
  return {g.degree(v), s};
}

std::vector<std::uint64_t> next_level(const std::vector<std::uint64_t>& parents, int m) {
  std::vector<std::uint64_t> out;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t pk : parents) {
    Graph p = unpack_small(m, pk);
    seen.clear();
    for (VertexSet s = 0; s < (VertexSet{1} << m); ++s) {
      GraphBuilder b(m + 1);
      for (auto e : p.edges()) b.add_edge(e.u, e.v);
      for_each_vertex(s, [&](int w) { b.add_edge(m, w); });
      Graph c = b.build();
      auto inv_new = invariant(c, m);
      bool best = true;
      for (int v = 0; v < m && best; ++v) best = invariant(c, v) <= inv_new;
      if (!best) continue;

      auto lab = canonical_labeling(c);
      int vstar = -1;
      for (int i = m; i >= 0; --i) {
        if (invariant(c, lab.order[i]) == inv_new) {
          vstar = lab.order[i];
          break;
        }
      }
      bool accept = vstar == m;
      if (!accept) {
        auto orbits = [&] {
          std::vector<int> parent(m + 1);
          std::iota(parent.begin(), parent.end(), 0);
          auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
          };
          for (const auto& gamma : lab.automorphisms) {
            for (int x = 0; x <= m; ++x) parent[find(x)] = find(gamma[x]);
          }
          return find(vstar) == find(m);
        };
        accept = orbits() || pack_small(canonical_form(remove_vertices(c, bit(vstar)).graph)) == pk;
      }
      if (!accept) continue;
      std::uint64_t key = pack_small(lab.form);
      if (seen.insert(key).second) out.push_back(key);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> level_keys(int n) {
  if (n < 0 || n > kMaxEnumeration) throw GraphError("built-in enumeration covers 0 <= n <= 10");
  std::vector<std::uint64_t> level{0};
  for (int m = 1; m < n; ++m) level = next_level(level, m);
  return level;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
  std::vector<Graph> out;
  for (auto key : level_keys(n)) out.push_back(unpack_small(n, key));
  return out;
}

std::vector<Graph> enumerate_2connected(int n) {
  if (n < 3 || n > kMaxEnumeration) throw GraphError("2-connected enumeration covers 3 <= n <= 10");
  std::vector<Graph> out;
  for (auto key : level_keys(n)) {
    Graph g = unpack_small(n, key);
    if (g.min_degree() >= 2 && is_2_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for (auto key : level_keys(n)) {
    Graph g = unpack_small(n, key);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> brute_force_classes(int n) {
  if (n < 0 || n > 6) throw GraphError("brute-force classes cover n <= 6");
  const int pairs = n * (n - 1) / 2;
  std::vector<int> perm(n);
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> reps;
  for (std::uint64_t key = 0; key < (std::uint64_t{1} << pairs); ++key) {
    Graph g = unpack_small(n, key);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      best = std::min(best, pack_small(permute(g, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<Graph> out;
  for (auto k : reps) out.push_back(unpack_small(n, k));
  return out;
}

}  // namespace egstab
