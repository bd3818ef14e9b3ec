#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "egstab/constructions.hpp"
#include "egstab/graph.hpp"
#include "egstab/recognizers.hpp"
#include "egstab/report.hpp"

namespace egstab {

struct GraphSource {
  enum class Kind { Enumeration, Graph6File, ConstructionGrid, Random };
  Kind kind = Kind::Enumeration;
  int n = 0;  // enumeration order, grid lower bound, random order
  int n_max = -1;  // grid upper bound
  int k = 0;  // grid
  std::string path;
  std::uint64_t seed = 1;
  int samples = 1000;
  double density = 0.5;
};

enum class GraphFilter { All, Connected, TwoConnected };

/// Graphs of the source passing the filter.  Enumeration results are cached
/// per (n, filter) for the life of the process.  Throws ParameterError on a
/// bad source and std::runtime_error on I/O problems.
std::vector<Graph> load_graphs(const GraphSource& src, GraphFilter filter);
std::string coverage_mode(const GraphSource& src);
std::string describe(const GraphSource& src);

struct GridMember {
  LabeledConstruction member;
  std::string label;  // class label as used by class_list(k)
  int k = 0;          // k to classify under
};

/// Class members of G(n,k) over n_min..n_max built from a fixed set of
/// shapes.  Shapes the builders reject are skipped.
std::vector<GridMember> construction_grid(int k, int n_min, int n_max);

struct SweepOptions {
  int jobs = 1;
  ClassifyOptions classify;
  std::string coverage = "exhaustive";
};

/// Splits [0, count) into fixed chunks, runs `item(i, report)` over them on
/// `jobs` threads and merges the chunk reports in index order, so the result
/// does not depend on the thread count.
template <class F>
VerificationReport run_chunked(std::size_t count, int jobs, F&& item) {
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<VerificationReport> parts(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
      const std::size_t end = std::min(count, (c + 1) * kChunk);
      for (std::size_t i = c * kChunk; i < end; ++i) item(i, parts[c]);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(chunks)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  VerificationReport out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

enum class StabilityMode { T3, Main, T3Small, ThreeConnected };
std::string mode_name(StabilityMode m);
std::optional<StabilityMode> parse_mode(std::string_view name);

/// Graphs outside the mode's hypotheses are tallied, not judged.
VerificationReport stability_sweep(std::span<const Graph> graphs, int k, StabilityMode mode,
                                   const SweepOptions& opts = {});
/// Outcome for one graph; a diagnosis when it fails.
std::pair<std::string, std::optional<std::string>> stability_outcome(const Graph& g, int k, StabilityMode mode,
                                                                     const ClassifyOptions& opts = {});

/// Maximum e over 2-connected c < k graphs and the shape of the maximisers.
VerificationReport kopylov_sweep(std::span<const Graph> graphs, int k, const SweepOptions& opts = {});

/// n >= 8, c < 7 and e >= floor((5n-6)/2) force G inside H(n,7,3).
VerificationReport seven_cycle_corollary_sweep(std::span<const Graph> graphs, const SweepOptions& opts = {});

/// Erdős–Gallai path bound and the connected path-version stability, both
/// directly and through the apex graph.
VerificationReport path_sweep(std::span<const Graph> graphs, int k, const SweepOptions& opts = {});
/// c(apex(G)) = (vertices on a longest path of G) + 1 for connected G, n >= 2.
VerificationReport apex_sweep(std::span<const Graph> graphs, const SweepOptions& opts = {});

struct ClassicalLimits {
  int erdos_max_n = 8;
  int dirac_max_n = 8;
  int path_lemma_max_n = 8;
  int chvatal_max_n = 8;
  int closure_max_n = 8;
  int posa_max_n = 7;
  int enomoto_max_n = 8;
  int nonham_max_n = 9;
  std::vector<int> bipartite_s = {4, 5};
};

std::vector<VerificationReport> classical_suite(const ClassicalLimits& limits = {}, const SweepOptions& opts = {});

struct ContractionLimits {
  int partner_max_n = 8;
  int cycle_pair_max_n = 8;
  int monotone_max_n = 7;
  int low_degree_max_n = 7;
};

std::vector<VerificationReport> contraction_suite(const ContractionLimits& limits = {}, const SweepOptions& opts = {});

/// Bridge claims for a longest cycle of maximum degree sum, k <= 8.
VerificationReport bridge_claims_sweep(std::span<const Graph> graphs, const SweepOptions& opts = {});
std::optional<std::string> bridge_claims_check(const Graph& g);

/// Pair path profile of the t = 4 families against the exceptional-pair table.
VerificationReport path_profile_check(const SweepOptions& opts = {});

/// Split preservation for the t = 4 family members.
VerificationReport split_suite(const SweepOptions& opts = {});

/// Basic Procedure runs and audits on grid members and edge-deleted
/// variants, orders k..n_max.
VerificationReport procedure_grid_audit(int k, int n_max, int variants_per_member, std::uint64_t seed,
                                        const SweepOptions& opts = {});

/// Round trip of every grid member with n >= 3k/2 plus `samples` random
/// edge-deleted 2-connected subgraphs per class.
VerificationReport stability_property_check(int k, int samples, std::uint64_t seed, const SweepOptions& opts = {});

/// c(H(n,k,t)) = k-1 and 2-connectivity, and c < k for the class grid.
VerificationReport extremal_grid_check(int k_min, int k_max, int n_max, const SweepOptions& opts = {});

}  // namespace egstab
