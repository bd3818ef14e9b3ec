#include "egstab/canon.hpp"

#include <algorithm>
#include <numeric>

namespace egstab {

namespace {

// Ordered partition: lab lists the vertices, bit i of starts marks a cell
// beginning at position i.
struct Partition {
  std::vector<int> lab;
  VertexSet starts = 0;

  int cell_end(int start, int n) const {
    VertexSet later = starts & ~first_n(start + 1);
    return later == 0 ? n : lowest(later);
  }
  bool discrete(int n) const { return count(starts) == n; }
};

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    p.starts = n_ == 0 ? 0 : bit(0);
    // Degree classes first keep the tree shallow.
    std::vector<int> queue;
    if (n_ > 0) queue.push_back(0);
    refine(p, queue);

    std::vector<int> path;
    search(p, path);

    CanonicalLabeling out;
    out.order = best_lab_;
    out.position.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.position[best_lab_[i]] = i;
    GraphBuilder b(n_);
    for (int i = 0; i < n_; ++i) {
      for_each_vertex(best_cert_[i] & ~first_n(i + 1), [&](int j) { b.add_edge(i, j); });
    }
    out.form = b.build();
    out.automorphisms = std::move(autos_);
    return out;
  }

 private:
  void refine(Partition& p, std::vector<int>& queue) const {
    std::vector<int> cnt(n_);
    std::size_t head = 0;
    VertexSet queued = 0;
    for (int s : queue) queued |= bit(s);
    while (head < queue.size()) {
      const int ws = queue[head++];
      queued &= ~bit(ws);
      VertexSet w = 0;
      const int we = p.cell_end(ws, n_);
      for (int i = ws; i < we; ++i) w |= bit(p.lab[i]);

      for (int a = 0; a < n_;) {
        const int b = p.cell_end(a, n_);
        if (b - a > 1) {
          bool uniform = true;
          for (int i = a; i < b; ++i) {
            cnt[p.lab[i]] = count(g_.neighbors(p.lab[i]) & w);
            uniform = uniform && cnt[p.lab[i]] == cnt[p.lab[a]];
          }
          if (!uniform) {
            std::stable_sort(p.lab.begin() + a, p.lab.begin() + b,
                             [&](int x, int y) { return cnt[x] < cnt[y]; });
            for (int i = a + 1; i < b; ++i) {
              if (cnt[p.lab[i]] != cnt[p.lab[i - 1]]) p.starts |= bit(i);
            }
            for (int i = a; i < b; i = p.cell_end(i, n_)) {
              if (!contains(queued, i)) {
                queued |= bit(i);
                queue.push_back(i);
              }
            }
          }
        }
        a = b;
      }
    }
  }

  Partition individualize(const Partition& p, int start, int v) const {
    Partition c = p;
    auto it = std::find(c.lab.begin() + start, c.lab.end(), v);
    std::rotate(c.lab.begin() + start, it, it + 1);
    c.starts |= bit(start + 1);
    std::vector<int> queue{start};
    refine(c, queue);
    return c;
  }

  std::vector<VertexSet> certificate(const Partition& p) const {
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    std::vector<VertexSet> cert(n_, 0);
    for (int i = 0; i < n_; ++i) {
      for_each_vertex(g_.neighbors(p.lab[i]), [&](int w) { cert[i] |= bit(pos[w]); });
    }
    return cert;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    bool identity = true;
    for (int v = 0; v < n_; ++v) identity = identity && gamma[v] == v;
    if (!identity) autos_.push_back(std::move(gamma));
  }

  // Returns the depth at which exploration resumes.
  int search(const Partition& p, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    if (p.discrete(n_)) {
      auto cert = certificate(p);
      if (!have_first_) {
        have_first_ = true;
        first_cert_ = best_cert_ = cert;
        first_lab_ = best_lab_ = p.lab;
        first_path_ = path;
        return depth;
      }
      if (cert == first_cert_) {
        record_automorphism(first_lab_, p.lab);
        int common = 0;
        while (common < depth && path[common] == first_path_[common]) ++common;
        return common;
      }
      if (cert == best_cert_) {
        record_automorphism(best_lab_, p.lab);
      } else if (cert < best_cert_) {
        best_cert_ = std::move(cert);
        best_lab_ = p.lab;
      }
      return depth;
    }

    int target = -1;
    int target_size = n_ + 1;
    for (int a = 0; a < n_;) {
      int b = p.cell_end(a, n_);
      if (b - a > 1 && b - a < target_size) {
        target = a;
        target_size = b - a;
      }
      a = b;
    }
    std::vector<int> candidates(p.lab.begin() + target, p.lab.begin() + target + target_size);
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> tried;
    for (int v : candidates) {
      if (!tried.empty() && same_orbit_as_tried(v, tried, path)) continue;
      tried.push_back(v);
      path.push_back(v);
      int resume = search(individualize(p, target, v), path);
      path.pop_back();
      if (resume < depth) return resume;
    }
    return depth;
  }

  bool same_orbit_as_tried(int v, const std::vector<int>& tried, const std::vector<int>& fixed) const {
    if (autos_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : autos_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int f) { return gamma[f] == f; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    return std::any_of(tried.begin(), tried.end(), [&](int u) { return find(u) == find(v); });
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  std::vector<VertexSet> first_cert_, best_cert_;
  std::vector<int> first_lab_, best_lab_, first_path_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Searcher(g).run(); }

Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<int> automorphism_orbits(const Graph& g) {
  auto lab = canonical_labeling(g);
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gamma : lab.automorphisms) {
    for (int x = 0; x < n; ++x) {
      int a = find(x);
      int b = find(gamma[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> rep(n);
  for (int v = 0; v < n; ++v) rep[v] = find(v);
  return rep;
}

}  // namespace egstab
