#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egstab/constructions.hpp"
#include "egstab/graph.hpp"

namespace egstab {

/// W(v): neighbours w with N[v] not inside N[w].
VertexSet w_set(const Graph& g, int v);

/// A neighbour w of v with G/vw 2-connected, preferring W(v); none only if
/// the contraction lemma fails.  Throws ParameterError unless G is
/// 2-connected with n >= 4.
std::optional<int> safe_partner(const Graph& g, int v);

/// Edges whose contraction keeps G 2-connected, in lexicographic order.
std::vector<EdgeRef> contractible_edges(const Graph& g);

struct GuardedStep {
  Graph graph;
  EdgeRef edge;
};

/// One contraction by the rules: 2-connected result, then fewest triangles,
/// then an endpoint of smallest degree, then lexicographic.
GuardedStep guarded_contraction_step(const Graph& g);
/// Every edge the rules allow (ties included).
std::vector<EdgeRef> guarded_candidates(const Graph& g);

enum class Rule { R1, R2, R3, R4 };
std::string rule_name(Rule r);

struct ProcedureStep {
  Rule rule = Rule::R1;
  EdgeRef edge{0, 0};       // contracted edge (R2) or the pair uv (R3)
  VertexSet removed = 0;    // K_{t-1} deleted by R3, labels before the step
  int T = -1;               // triangles on the contracted edge (R2)
  int n_before = 0;
  int n_after = 0;
  int e_before = 0;
  int e_after = 0;
  bool connected2_before = false;
  bool connected2_after = false;
};

struct ProcedureTrace {
  int k = 0;
  int t = 0;
  Graph initial;
  Graph final_graph;
  std::vector<ProcedureStep> steps;
  bool in_hypotheses = true;
  std::vector<std::string> notes;  // why the run is outside the hypotheses
};

/// Runs R1..R4 from G_n = G.  Throws ParameterError when k < 5, n < k or G
/// is not 2-connected; the edge bound and c(G) < k are only stamped.
ProcedureTrace basic_procedure(const Graph& g, int k);

/// Graph obtained by applying the recorded steps to trace.initial.
Graph replay(const ProcedureTrace& trace);

struct AuditEntry {
  int step = -1;  // -1 for whole-trace checks
  std::string check;
  bool passed = true;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  int failures() const;
  bool ok() const { return failures() == 0; }
};

/// Recomputes every intermediate graph from the steps and checks the
/// per-step and final-state properties.
AuditReport audit_trace(const ProcedureTrace& trace);

struct SplitReport {
  int supergraphs = 0;      // non-isomorphic F containing the member
  std::int64_t splits = 0;  // 2-connected F' with F'/xy = F
  std::int64_t qualifying = 0;  // of those, c(F') < k
  std::int64_t base_case = 0;   // split vertex outside the member
  std::vector<Graph> violations;
};

struct SplitOptions {
  int extra_edges = 2;
  bool extra_vertex = true;
  int max_order = -1;  // defaults to 2t+3
};

/// Splits every vertex of every small 2-connected supergraph F of the
/// member with c(F) < k and checks that each 2-connected split F' with
/// c(F') < k still contains a member of the family union for k.
SplitReport split_preservation_check(const LabeledConstruction& member, int k, const SplitOptions& opts = {});

/// All graphs F' with F'/xy = F obtained by splitting u (x keeps label u, y
/// is appended); x and y each keep at least one old neighbour.
std::vector<Graph> vertex_splits(const Graph& f, int u);

}  // namespace egstab
