#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace egstab {

// Vertex sets are 64-bit masks; vertex v is bit v.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 63;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
constexpr int count(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

// Calls f(v) for every vertex of s in ascending order.
template <class F>
void for_each_vertex(VertexSet s, F&& f) {
  for (; s != 0; s &= s - 1) f(lowest(s));
}

std::vector<int> to_vector(VertexSet s);
VertexSet to_set(std::span<const int> vertices);

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An edge reference with u < v.  Operations that take an EdgeRef check that it
/// names an edge of the graph they are applied to.
struct EdgeRef {
  int u = 0;
  int v = 0;

  static EdgeRef of(int a, int b) { return a < b ? EdgeRef{a, b} : EdgeRef{b, a}; }
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Simple undirected graph on vertices 0..n-1, n <= 63, stored as one
/// adjacency bit row per vertex.  Values are immutable once built; use
/// GraphBuilder to assemble one.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;
  VertexSet vertices() const { return first_n(order()); }

  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return count(rows_[v]); }
  bool adjacent(int u, int v) const { return contains(rows_[u], v); }

  int min_degree() const;
  int max_degree() const;
  std::vector<int> degrees() const;
  std::vector<EdgeRef> edges() const;
  std::span<const VertexSet> rows() const { return rows_; }

  // Degree of v counted only into the set s.
  int degree_into(int v, VertexSet s) const { return count(rows_[v] & s); }
  // Number of edges with both ends in s.
  int edges_within(VertexSet s) const;

  bool has_edge(EdgeRef e) const;
  void require_vertex(int v) const;
  void require_edge(EdgeRef e) const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return a.order() <=> b.order();
    return a.rows_ <=> b.rows_;
  }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g) : rows_(g.rows_) {}

  int order() const { return static_cast<int>(rows_.size()); }
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  GraphBuilder& add_clique(VertexSet s);
  GraphBuilder& add_complete_bipartite(VertexSet a, VertexSet b);
  bool adjacent(int u, int v) const { return contains(rows_[u], v); }
  Graph build() const;

 private:
  void check(int u, int v) const;
  std::vector<VertexSet> rows_;
};

/// Graph with exactly the listed edges.  Throws GraphError on an endpoint out of
/// range or a self-loop; a pair listed twice (in either order) is one edge.
Graph make_graph(int n, std::span<const std::pair<int, int>> edges);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

/// Result of a vertex-removing operation.  `original[i]` is the vertex of the
/// input graph that became vertex i.
struct Subgraph {
  Graph graph;
  std::vector<int> original;
};

/// Result of contracting an edge.  `relabel[v]` is the vertex of the
/// contracted graph that input vertex v became; both endpoints map to the
/// merged vertex, which takes the smaller label.
struct Contraction {
  Graph graph;
  std::vector<int> relabel;
  int merged = 0;
};

Contraction contract_edge(const Graph& g, EdgeRef e);
Subgraph induced(const Graph& g, VertexSet s);
Subgraph remove_vertices(const Graph& g, VertexSet s);
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
Graph add_apex(const Graph& g);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

int triangles_on_edge(const Graph& g, EdgeRef e);
/// Minimum of triangles_on_edge over all edges; throws on an edgeless graph.
int min_triangle_count(const Graph& g);

std::string to_string(const Graph& g);

}  // namespace egstab
