#include "egstab/graph.hpp"

#include <algorithm>
#include <sstream>

namespace egstab {

std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(count(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet to_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= bit(v);
  return s;
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet r : rows_) twice += count(r);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : kMaxVertices + 1;
  for (VertexSet r : rows_) best = std::min(best, count(r));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (VertexSet r : rows_) best = std::max(best, count(r));
  return best;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(rows_.size());
  for (std::size_t v = 0; v < rows_.size(); ++v) d[v] = count(rows_[v]);
  return d;
}

std::vector<EdgeRef> Graph::edges() const {
  std::vector<EdgeRef> out;
  for (int u = 0; u < order(); ++u) {
    for_each_vertex(rows_[u] & ~first_n(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  for_each_vertex(s, [&](int v) { twice += count(rows_[v] & s); });
  return twice / 2;
}

bool Graph::has_edge(EdgeRef e) const {
  return e.u >= 0 && e.v < order() && e.u < e.v && adjacent(e.u, e.v);
}

void Graph::require_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(order()));
  }
}

void Graph::require_edge(EdgeRef e) const {
  if (!has_edge(e)) {
    throw GraphError("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not an edge");
  }
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside 0..63");
  }
  rows_.assign(n, 0);
}

void GraphBuilder::check(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw GraphError("endpoint out of range in (" + std::to_string(u) + "," +
                     std::to_string(v) + ")");
  }
  if (u == v) throw GraphError("self-loop at " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check(u, v);
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check(u, v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
  return *this;
}

GraphBuilder& GraphBuilder::add_clique(VertexSet s) {
  for_each_vertex(s, [&](int v) { rows_[v] |= s & ~bit(v); });
  return *this;
}

GraphBuilder& GraphBuilder::add_complete_bipartite(VertexSet a, VertexSet b) {
  if (a & b) throw GraphError("bipartite sides overlap");
  for_each_vertex(a, [&](int v) { rows_[v] |= b; });
  for_each_vertex(b, [&](int v) { rows_[v] |= a; });
  return *this;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.rows_ = rows_;
  return g;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return make_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph complete_graph(int n) { return GraphBuilder(n).add_clique(first_n(n)).build(); }

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph complete_bipartite(int a, int b) {
  return GraphBuilder(a + b).add_complete_bipartite(first_n(a), first_n(a + b) & ~first_n(a)).build();
}

namespace {

// Keeps the vertices of `keep` in ascending order and relabels them 0..|keep|-1.
Subgraph compress(const Graph& g, VertexSet keep) {
  Subgraph out;
  out.original = to_vector(keep);
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) index[out.original[i]] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(out.original.size()));
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for_each_vertex(g.neighbors(out.original[i]) & keep, [&](int w) {
      if (index[w] > static_cast<int>(i)) b.add_edge(static_cast<int>(i), index[w]);
    });
  }
  out.graph = b.build();
  return out;
}

}  // namespace

Contraction contract_edge(const Graph& g, EdgeRef e) {
  g.require_edge(e);
  const int n = g.order();
  const int keep = e.u;  // min(x, y)
  const int gone = e.v;
  Contraction out;
  out.relabel.resize(n);
  for (int v = 0; v < n; ++v) out.relabel[v] = v < gone ? v : v - 1;
  out.relabel[gone] = keep;
  out.merged = keep;

  GraphBuilder b(n - 1);
  for (int v = 0; v < n; ++v) {
    for_each_vertex(g.neighbors(v), [&](int w) {
      int a = out.relabel[v];
      int c = out.relabel[w];
      if (a < c) b.add_edge(a, c);
    });
  }
  out.graph = b.build();
  return out;
}

Subgraph induced(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw GraphError("vertex set exceeds the graph");
  return compress(g, s);
}

Subgraph remove_vertices(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw GraphError("vertex set exceeds the graph");
  return compress(g, g.vertices() & ~s);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (auto e : g1.edges()) b.add_edge(e.u, e.v);
  for (auto e : g2.edges()) b.add_edge(e.u + n1, e.v + n1);
  return b.build();
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  GraphBuilder b(GraphBuilder(disjoint_union(g1, g2)));
  b.add_complete_bipartite(first_n(n1), first_n(n) & ~first_n(n1));
  return b.build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph add_apex(const Graph& g) { return join(g, empty_graph(1)); }

Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation size mismatch");
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || contains(seen, p)) throw GraphError("not a permutation");
    seen |= bit(p);
  }
  GraphBuilder b(n);
  for (auto e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return b.build();
}

int triangles_on_edge(const Graph& g, EdgeRef e) {
  g.require_edge(e);
  return count(g.neighbors(e.u) & g.neighbors(e.v));
}

int min_triangle_count(const Graph& g) {
  int best = -1;
  for (int u = 0; u < g.order(); ++u) {
    for_each_vertex(g.neighbors(u) & ~first_n(u + 1), [&](int v) {
      int t = count(g.neighbors(u) & g.neighbors(v));
      if (best < 0 || t < best) best = t;
    });
  }
  if (best < 0) throw GraphError("T(G) is undefined for an edgeless graph");
  return best;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " e=" << g.size() << " {";
  bool first = true;
  for (auto e : g.edges()) {
    os << (first ? "" : " ") << e.u << "-" << e.v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace egstab
