#include "egstab/constructions.hpp"

#include <algorithm>
#include <set>

#include "egstab/structure.hpp"

namespace egstab {

std::int64_t binom2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::int64_t h_value(int n, int k, int a) {
  if (a < 1 || 2 * a >= k || n < k) {
    throw ParameterError("h(n,k,a) needs n >= k and 1 <= a < k/2, got (" + std::to_string(n) + "," +
                         std::to_string(k) + "," + std::to_string(a) + ")");
  }
  return binom2(k - a) + std::int64_t{a} * (n - k + a);
}

std::int64_t ell_value(int n, int d) {
  if (d < 1 || n <= 2 * d) {
    throw ParameterError("ell(n,d) needs d >= 1 and n > 2d");
  }
  std::int64_t first = binom2(n - d) + std::int64_t{d} * d;
  std::int64_t half = (n - 1) / 2;
  std::int64_t second = binom2((n + 2) / 2) + half * half;
  return std::max(first, second);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::G3: return "G3";
    case Family::G4: return "G4";
    case Family::G5: return "G5";
    case Family::G6: return "G6";
    case Family::G7: return "G7";
    case Family::G8: return "G8";
    case Family::F0: return "F0";
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
    case Family::F4Prime: return "F4'";
    case Family::FGeneral: return "F(A,B,A1,A2)";
  }
  return "?";
}

VertexSet LabeledConstruction::part(const std::string& name) const {
  auto it = parts.find(name);
  if (it == parts.end()) throw ParameterError("construction has no part " + name);
  return it->second;
}

int LabeledConstruction::vertex(const std::string& name) const {
  VertexSet s = part(name);
  if (count(s) != 1) throw ParameterError("part " + name + " is not a single vertex");
  return lowest(s);
}

namespace {

VertexSet range(int from, int size) { return first_n(from + size) & ~first_n(from); }

void name_vertices(LabeledConstruction& out, const std::string& prefix, VertexSet s) {
  int i = 1;
  for_each_vertex(s, [&](int v) { out.parts[prefix + std::to_string(i++)] = bit(v); });
}

}  // namespace

LabeledConstruction build_H(int n, int k, int a) {
  h_value(n, k, a);
  if (n > kMaxVertices) throw ParameterError("n exceeds 63");
  LabeledConstruction out;
  out.family = Family::H;
  out.n = n;
  out.k = k;
  out.t = a;
  VertexSet A = range(0, a);
  VertexSet C = range(a, k - 2 * a);
  VertexSet B = range(k - a, n - k + a);
  GraphBuilder b(n);
  b.add_clique(A | C);
  b.add_complete_bipartite(A, B);
  out.graph = b.build();
  out.parts = {{"A", A}, {"B", B}, {"C", C}};
  name_vertices(out, "a", A);
  name_vertices(out, "b", B);
  name_vertices(out, "c", C);
  return out;
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

// Adds the star `shape` on fresh vertices starting at `next`; the center is
// joined to `center_to` and leaves to `leaf_to` (an A-vertex).
VertexSet add_star(GraphBuilder& b, int& next, int size, VertexSet center_to, VertexSet leaf_to,
                   bool small_full) {
  VertexSet s = range(next, size);
  int center = next;
  next += size;
  if (size <= 2 && small_full) {
    b.add_clique(s);
    b.add_complete_bipartite(s, center_to);
    return s;
  }
  b.add_complete_bipartite(bit(center), center_to);
  for_each_vertex(s & ~bit(center), [&](int leaf) {
    b.add_edge(center, leaf);
    b.add_complete_bipartite(bit(leaf), leaf_to);
  });
  return s;
}

LabeledConstruction build_bridge_class(const ClassSpec& spec, int s) {
  require(spec.k == 8, family_name(spec.cls) + " is defined for k = 8 only");
  int total = s;
  for (const auto& c : spec.components) {
    require(c.size >= 1, "component sizes must be positive");
    require(c.p != c.q && c.p >= 0 && c.q >= 0 && c.p < s && c.q < s, "component pair must be two A-vertices");
    if (c.size >= 3) require(c.anchor == c.p || c.anchor == c.q, "leaf anchor must be in the component's pair");
    total += c.size;
  }
  require(total == spec.n, "part sizes do not add up to n");
  require(spec.n <= kMaxVertices, "n exceeds 63");

  auto pair_is = [](const ComponentShape& c, int x, int y) {
    return (c.p == x && c.q == y) || (c.p == y && c.q == x);
  };
  for (const auto& c : spec.components) {
    bool bridge = c.size >= 2;
    switch (spec.cls) {
      case Family::G5:
        require(c.p == 0 || c.q == 0, "G5: a1 must be adjacent to every component");
        break;
      case Family::G6:
        if (bridge) require(pair_is(c, 0, 1), "G6: every J3-bridge sits on {a1,a2}");
        else require(c.p == 0 || c.q == 0, "G6: every isolated vertex has a1 as a neighbour");
        break;
      case Family::G7:
        if (bridge) require(pair_is(c, 0, 1), "G7: every J3-bridge sits on {a1,a2}");
        else require(pair_is(c, 2, 3), "G7: every isolated vertex has N = {a3,a4}");
        break;
      case Family::G8:
        require(pair_is(c, 0, 1), "G8: every component sits on {a1,a2}");
        break;
      default:
        break;
    }
  }

  LabeledConstruction out;
  out.family = spec.cls;
  out.n = spec.n;
  out.k = 8;
  out.t = 3;
  GraphBuilder b(spec.n);
  VertexSet A = range(0, s);
  b.add_clique(A);
  int next = s;
  VertexSet J = 0;
  int idx = 1;
  for (const auto& c : spec.components) {
    VertexSet pq = bit(c.p) | bit(c.q);
    VertexSet comp = add_star(b, next, c.size, pq, bit(c.anchor), true);
    out.parts["S" + std::to_string(idx++)] = comp;
    J |= comp;
  }
  out.graph = b.build();
  out.parts["A"] = A;
  out.parts["J"] = J;
  name_vertices(out, "a", A);
  require(!has_cycle_at_least(out.graph, 8), family_name(spec.cls) + ": this shape has a cycle of length >= 8");
  return out;
}

}  // namespace

LabeledConstruction build_class_member(const ClassSpec& spec) {
  const int t = spec.t >= 0 ? spec.t : t_of(spec.k);
  require(spec.k >= 4, "k must be at least 4");
  if (spec.cls == Family::G1 || spec.cls == Family::H) {
    require(t >= 1 && 2 * t < spec.k, "t out of range for k");
    auto out = build_H(spec.n, spec.k, t);
    out.family = Family::G1;
    return out;
  }

  LabeledConstruction out;
  out.family = spec.cls;
  out.n = spec.n;
  out.k = spec.k;
  out.t = t;
  switch (spec.cls) {
    case Family::G2: {
      require(t >= 1, "t must be positive");
      require(spec.b >= 1, "G2 needs b1, so |B| >= 1");
      require(spec.j >= 0 && t + spec.b + spec.j == spec.n, "part sizes do not add up to n");
      require(spec.n <= kMaxVertices, "n exceeds 63");
      VertexSet A = range(0, t);
      VertexSet B = range(t, spec.b);
      VertexSet J = range(t + spec.b, spec.j);
      int a1 = 0;
      int b1 = t;
      GraphBuilder b(spec.n);
      b.add_clique(A);
      b.add_complete_bipartite(A, B);
      b.add_complete_bipartite(J, bit(a1) | bit(b1));
      out.graph = b.build();
      out.parts = {{"A", A}, {"B", B}, {"J", J}, {"a1", bit(a1)}, {"b1", bit(b1)}};
      return out;
    }
    case Family::G3: {
      require(t >= 2, "G3 needs |A| >= 2");
      require(spec.components.size() >= 2, "G3: G[J] needs more than one component");
      int total = t + spec.b;
      for (const auto& c : spec.components) {
        require(c.size >= 2, "G3: every star of G[J] has at least two vertices");
        if (c.size >= 3) require(c.anchor == 0 || c.anchor == 1, "G3: a(S) must lie in A' = {a1,a2}");
        total += c.size;
      }
      require(total == spec.n, "part sizes do not add up to n");
      require(spec.n <= kMaxVertices, "n exceeds 63");
      VertexSet A = range(0, t);
      VertexSet B = range(t, spec.b);
      VertexSet Ap = bit(0) | bit(1);
      GraphBuilder b(spec.n);
      b.add_clique(A);
      b.add_complete_bipartite(A, B);
      int next = t + spec.b;
      VertexSet J = 0;
      int idx = 1;
      for (const auto& c : spec.components) {
        VertexSet comp = add_star(b, next, c.size, Ap, bit(c.anchor), true);
        out.parts["S" + std::to_string(idx++)] = comp;
        J |= comp;
      }
      out.graph = b.build();
      out.parts["A"] = A;
      out.parts["B"] = B;
      out.parts["J"] = J;
      out.parts["A'"] = Ap;
      return out;
    }
    case Family::G4: {
      require(spec.k == 10, "G4 is empty unless k = 10");
      int total = 3;
      for (const auto& c : spec.components) {
        require(c.size >= 1, "component sizes must be positive");
        if (c.size >= 3) require(c.anchor >= 0 && c.anchor < 3, "G4: a(S) must lie in A");
        total += c.size;
      }
      require(total == spec.n, "part sizes do not add up to n");
      require(spec.n <= kMaxVertices, "n exceeds 63");
      VertexSet A = range(0, 3);
      GraphBuilder b(spec.n);
      b.add_clique(A);
      int next = 3;
      VertexSet J = 0;
      int idx = 1;
      for (const auto& c : spec.components) {
        VertexSet comp = add_star(b, next, c.size, A, bit(c.anchor), true);
        out.parts["S" + std::to_string(idx++)] = comp;
        J |= comp;
      }
      out.graph = b.build();
      out.parts["A"] = A;
      out.parts["J"] = J;
      out.t = 3;
      return out;
    }
    case Family::G5: return build_bridge_class(spec, 3);
    case Family::G6:
    case Family::G7: return build_bridge_class(spec, 4);
    case Family::G8: return build_bridge_class(spec, 5);
    default:
      throw ParameterError(family_name(spec.cls) + " is not a G-class");
  }
}

LabeledConstruction build_F_member(const FFamilySpec& spec) {
  const int t = spec.t;
  require(t >= 2, "t must be at least 2");
  LabeledConstruction out;
  out.family = spec.family;
  out.t = t;

  int a_size = t;
  int b_size = 0;
  int budget = 0;
  bool subdivide = false;
  bool cc = false;
  std::vector<int> a1s, a2s;
  switch (spec.family) {
    case Family::F0:
      b_size = t + 1;
      budget = t - 3;
      break;
    case Family::F1:
      b_size = t + 2;
      budget = t - 4;
      break;
    case Family::F2:
      b_size = t + 2;
      budget = t - 4;
      subdivide = true;
      break;
    case Family::F3:
      b_size = t;
      budget = t - 4;
      cc = true;
      a1s = {0, 1};
      a2s = {2, 3};
      break;
    case Family::F4:
      require(t == 4, "F4 is defined for t = 4 only");
      a_size = 3;
      b_size = 6;
      break;
    case Family::F4Prime:
      require(t == 4, "F4' is defined for t = 4 only");
      b_size = 4;
      cc = true;
      a1s = a2s = {0, 1, 2};
      break;
    case Family::FGeneral:
      b_size = spec.b;
      budget = t - 4;
      cc = true;
      a1s = spec.a1_set;
      a2s = spec.a2_set;
      break;
    default:
      throw ParameterError(family_name(spec.family) + " is not an F-family");
  }
  require(b_size >= 1, "B must be nonempty");
  require(static_cast<int>(spec.deletions.size()) <= std::max(budget, 0),
          family_name(spec.family) + ": deletion budget exceeded");
  if (cc) {
    std::set<int> s1(a1s.begin(), a1s.end()), s2(a2s.begin(), a2s.end());
    require(!s1.empty() && !s2.empty(), "A1 and A2 must be nonempty");
    for (int x : a1s) require(x >= 0 && x < a_size, "A1 index out of range");
    for (int x : a2s) require(x >= 0 && x < a_size, "A2 index out of range");
    std::set<int> uni = s1;
    uni.insert(s2.begin(), s2.end());
    require(uni.size() >= 3, "|A1 u A2| must be at least 3");
    bool disjoint = uni.size() == s1.size() + s2.size();
    if (std::min(s1.size(), s2.size()) == 1) require(disjoint, "A1, A2 must be disjoint when one is a singleton");
    if (spec.family == Family::F3) require(s1.size() == 2 && s2.size() == 2 && disjoint, "F3 needs disjoint pairs");
  }

  const int extra = (subdivide ? 1 : 0) + (cc ? 2 : 0);
  const int n = a_size + b_size + extra;
  require(n <= kMaxVertices, "n exceeds 63");
  out.n = n;
  VertexSet A = range(0, a_size);
  VertexSet B = range(a_size, b_size);
  GraphBuilder b(n);
  b.add_complete_bipartite(A, B);
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : spec.deletions) {
    require(i >= 0 && i < a_size && j >= 0 && j < b_size, "deletion index out of range");
    require(seen.insert({i, j}).second, "deletion listed twice");
    b.remove_edge(i, a_size + j);
  }
  out.parts = {{"A", A}, {"B", B}};
  name_vertices(out, "a", A);
  name_vertices(out, "b", B);
  if (spec.family == Family::F4) {
    b.add_edge(3, 4).add_edge(5, 6).add_edge(7, 8);
  }
  if (subdivide) {
    require(!seen.count({0, 0}), "F2 subdivides a1b1, which must not be deleted");
    int c1 = a_size + b_size;
    b.remove_edge(0, a_size);
    b.add_edge(0, c1).add_edge(c1, a_size);
    out.parts["c1"] = bit(c1);
    out.parts["C"] = bit(c1);
  }
  if (cc) {
    int c1 = a_size + b_size;
    int c2 = c1 + 1;
    b.add_edge(c1, c2);
    for (int x : a1s) b.add_edge(c1, x);
    for (int x : a2s) b.add_edge(c2, x);
    out.parts["c1"] = bit(c1);
    out.parts["c2"] = bit(c2);
    out.parts["C"] = bit(c1) | bit(c2);
  }
  out.graph = b.build();
  out.k = (spec.family == Family::F0) ? 2 * t + 1 : 2 * t + 2;
  return out;
}

}  // namespace egstab
