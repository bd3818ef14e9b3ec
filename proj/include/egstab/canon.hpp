#pragma once

#include <vector>

#include "egstab/graph.hpp"

namespace egstab {

struct CanonicalLabeling {
  // order[i] is the input vertex placed at canonical position i.
  std::vector<int> order;
  // position[v] is the canonical position of input vertex v.
  std::vector<int> position;
  Graph form;
  // Generators of Aut(G) found during the search, as vertex maps.
  std::vector<std::vector<int>> automorphisms;
};

/// Individualization-refinement with equitable partitions and orbit pruning.
/// Two graphs are isomorphic iff their canonical forms are equal.
CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Orbits of Aut(G) as a representative per vertex (the smallest vertex of its orbit).
std::vector<int> automorphism_orbits(const Graph& g);

}  // namespace egstab
