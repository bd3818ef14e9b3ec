#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "egstab/graph.hpp"

namespace egstab {

inline constexpr int kMaxEnumeration = 10;

/// Upper-triangle bit packing for n <= 11 (bit j(j-1)/2 + i for i < j).
std::uint64_t pack_small(const Graph& g);
Graph unpack_small(int n, std::uint64_t key);

/// One canonical representative per isomorphism class on n vertices
/// (0 <= n <= 10), in a fixed order.  Orderly generation: a child P+v is kept
/// only when P is the canonical parent of the child.
std::vector<Graph> enumerate_graphs(int n);
/// As above, restricted to 2-connected graphs; needs 3 <= n <= 10.
std::vector<Graph> enumerate_2connected(int n);
std::vector<Graph> enumerate_connected(int n);

/// Reference enumeration over all labeled graphs with a brute-force
/// canonical form (minimum over all n! relabelings); for n <= 6.
std::vector<Graph> brute_force_classes(int n);

}  // namespace egstab
