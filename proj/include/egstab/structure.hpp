#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "egstab/graph.hpp"

namespace egstab {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

class DeadlineExceeded : public std::runtime_error {
 public:
  DeadlineExceeded() : std::runtime_error("search deadline exceeded") {}
};

/// Exact solvers.  SubsetDp walks all vertex subsets and is used up to
/// kSubsetDpLimit vertices; BranchAndBound handles larger graphs.
enum class Solver { Auto, SubsetDp, BranchAndBound };
inline constexpr int kSubsetDpLimit = 20;

struct PathQueryResult {
  bool found = false;
  int length = 0;  // edges
  std::vector<int> witness;
};

struct CycleResult {
  int length = 0;  // 0 when acyclic
  std::vector<int> cycle;
};

// Connectivity.
VertexSet reachable(const Graph& g, int from, VertexSet within);
std::vector<VertexSet> components(const Graph& g, VertexSet within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_2_connected(const Graph& g);
bool is_3_connected(const Graph& g);
VertexSet cut_vertices(const Graph& g);
std::vector<std::pair<int, int>> separating_pairs(const Graph& g);
bool separates(const Graph& g, VertexSet removed);

// Cycles and paths.
CycleResult longest_cycle(const Graph& g, Solver solver = Solver::Auto, Deadline deadline = {});
int circumference(const Graph& g, Solver solver = Solver::Auto, Deadline deadline = {});
bool has_cycle_at_least(const Graph& g, int k, Deadline deadline = {});
PathQueryResult longest_xy_path(const Graph& g, int x, int y, Solver solver = Solver::Auto,
                                Deadline deadline = {});
/// Longest path anywhere in the graph (length in edges).
PathQueryResult longest_path(const Graph& g);
/// result[v] has bit L set iff there is an x,v-path with L edges using only
/// vertices of `allowed` (x must be in allowed).
std::vector<std::uint64_t> path_length_profile(const Graph& g, int x, VertexSet allowed);
/// Longest cycle through the edge e (0 if none).
int longest_cycle_through_edge(const Graph& g, EdgeRef e);
/// Is there a cycle of length exactly len containing the path w-z-w2?
bool cycle_through_path_of_length(const Graph& g, int w, int z, int w2, int len);

// Hamiltonicity.
bool is_hamiltonian(const Graph& g);
std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g);
/// Spanning cycle containing every edge of `forced`, if one exists.
std::optional<std::vector<int>> hamiltonian_cycle_through(const Graph& g, std::span<const EdgeRef> forced);

Graph k_closure(const Graph& g, int k);
/// Least i with d_i <= i and d_{n-i} < n-i (1-based sorted degrees).
/// Throws GraphError when g is hamiltonian or n < 3.
int chvatal_index(const Graph& g);

bool is_valid_cycle(const Graph& g, std::span<const int> cycle);
bool is_valid_path(const Graph& g, std::span<const int> path);

}  // namespace egstab
