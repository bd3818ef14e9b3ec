#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egstab/constructions.hpp"
#include "egstab/graph.hpp"

namespace egstab {

struct ClassWitness {
  std::string label;
  Family family = Family::G1;
  int k = 0;  // k of the class definition (6 for the k=6 classes inside G(n,7))
  int t = 0;  // clique-side size used
  VertexSet A = 0;
  std::vector<int> roles;  // a1, a2, ... in order (subset of A)
  int b1 = -1;
  VertexSet A_prime = 0;
  // Edge-maximal member on the same vertex labels with G a subgraph of it,
  // so the embedding is the identity map.
  Graph host;
};

bool is_star_forest(const Graph& g);
bool is_star_forest_after_removing(const Graph& g, VertexSet removed);

/// Every A with |A| = size and G - A a star forest, in colex order.
std::vector<VertexSet> star_forest_deletion_sets(const Graph& g, int size);

/// Smallest-size-first, colex within a size.
std::optional<ClassWitness> star_forest_witness(const Graph& g, int budget);

/// Is G a subgraph of H_{n,k,a} (n = order of G)?
std::optional<ClassWitness> embeds_in_H(const Graph& g, int k, int a);

enum class G6Reading { Weak, Strong };

struct ClassEntry {
  Family family;
  int k;
  int t;
  std::string label;
};

struct ClassifyOptions {
  G6Reading g6 = G6Reading::Weak;
  // t used for the k=6 classes inside G(n,7).
  int k7_inner_t = 2;
  bool check_preconditions = true;
};

/// The class list of G(n,k) in the order the theorems state it.
std::vector<ClassEntry> class_list(int k, const ClassifyOptions& opts = {});

/// Does G embed in an edge-maximal member of the class?
std::optional<ClassWitness> match_class(const Graph& g, const ClassEntry& entry, G6Reading g6 = G6Reading::Weak);

enum class VerdictKind { BelowBound, ClassMember, Violation };
std::string verdict_name(VerdictKind v);

struct StabilityVerdict {
  VerdictKind kind = VerdictKind::Violation;
  std::optional<ClassWitness> witness;
  std::optional<std::int64_t> threshold;  // h(n,k,t-1) when the theorem has one
  int edges = 0;
};

/// Requires G 2-connected with c(G) < k, k >= 4 and n >= k (checked unless
/// disabled in opts); throws ParameterError otherwise.
StabilityVerdict classify_stability(const Graph& g, int k, const ClassifyOptions& opts = {});

/// Re-checks a witness: G is a subgraph of the host, |A| is right and A is a
/// clique of the host.
bool verify_witness(const Graph& g, const ClassWitness& w);

// Bridges.
enum class BridgeKind { Singleton, J3, Other };

struct Bridge {
  VertexSet S = 0;
  VertexSet attachments = 0;  // N(S) n X
  BridgeKind kind = BridgeKind::Other;
  int center = -1;  // star center when G[S] is a star with 3+ vertices
  int anchor = -1;  // common X-neighbour of the leaves, x(S)
};

struct BridgeDecomposition {
  VertexSet X = 0;
  std::vector<Bridge> bridges;
  // Cycle order of X when X is a cycle (empty otherwise).
  std::vector<int> cycle;
  int cycle_distance(int u, int v) const;  // d_C on vertex labels
};

/// Is S a J3-bridge of the 2-set {a1, a2}?
bool is_j3_bridge(const Graph& g, VertexSet S, int a1, int a2);
/// Components of G - A' with J3 tagging; throws ParameterError unless |A'| = 2.
BridgeDecomposition j3_bridges(const Graph& g, VertexSet a_prime);
/// Bridges of a cycle; a bridge is tagged J3 when it has exactly two
/// attachments on the cycle and forms a J3-bridge over them.
BridgeDecomposition cycle_bridges(const Graph& g, const std::vector<int>& cycle);
/// Longest (x,y,S)-path: internal vertices in S, at least one of them; -1 if none.
int longest_path_through(const Graph& g, int x, int y, VertexSet S);

/// Every longest cycle once (rotation starts at its smallest vertex; the
/// direction puts the smaller neighbour second).  Intended for n <= 10.
std::vector<std::vector<int>> all_longest_cycles(const Graph& g);

bool property_W(const Graph& h, int ell);

struct FamilyEmbedding {
  Family family = Family::F0;
  VertexSet A = 0;
  VertexSet B = 0;
  int a1 = -1;
  int b1 = -1;
  int c1 = -1;
  int c2 = -1;
};

/// Exact structured search for a subgraph of G in the family with parameter
/// t.  F4 and F4' exist only for t = 4 and are searched separately.
std::optional<FamilyEmbedding> contains_family_member(const Graph& g, Family family, int t);
/// F0 for odd k; F1, F2, F3, F4, F4' for even k.
std::optional<FamilyEmbedding> contains_family_union(const Graph& g, int k);

}  // namespace egstab
