#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "egstab/constructions.hpp"
#include "egstab/contraction.hpp"
#include "egstab/graph6.hpp"
#include "egstab/harness.hpp"
#include "egstab/recognizers.hpp"
#include "egstab/structure.hpp"
#include "json.hpp"

using namespace egstab;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Family> parse_family(const std::string& s) {
  for (int f = 0; f <= static_cast<int>(Family::FGeneral); ++f)
    if (family_name(static_cast<Family>(f)) == s) return static_cast<Family>(f);
  if (s == "F4p" || s == "F4prime") return Family::F4Prime;
  return std::nullopt;
}

std::vector<int> split_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, sep)) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + s);
    }
  }
  return out;
}

std::string set_text(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for_each_vertex(s, [&](int v) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  });
  return out + "}";
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string render(const std::vector<VerificationReport>& reps, const std::string& format) {
  if (format == "json") return reports_to_json(reps);
  if (format == "csv") return reports_to_csv(reps);
  std::string out;
  for (const auto& r : reps) out += report_to_text(r);
  return out;
}

int exit_for(const std::vector<VerificationReport>& reps) {
  for (const auto& r : reps)
    if (!r.ok()) return kExitViolations;
  return 0;
}

nlohmann::ordered_json trace_json(const ProcedureTrace& tr, const AuditReport& audit) {
  nlohmann::ordered_json j;
  j["k"] = tr.k;
  j["t"] = tr.t;
  j["initial"] = to_graph6(tr.initial);
  j["final"] = to_graph6(tr.final_graph);
  j["in_hypotheses"] = tr.in_hypotheses;
  j["notes"] = tr.notes;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : tr.steps) {
    nlohmann::ordered_json st;
    st["rule"] = rule_name(s.rule);
    st["edge"] = {s.edge.u, s.edge.v};
    st["removed"] = to_vector(s.removed);
    st["T"] = s.T;
    st["n_before"] = s.n_before;
    st["n_after"] = s.n_after;
    st["e_before"] = s.e_before;
    st["e_after"] = s.e_after;
    st["2connected_before"] = s.connected2_before;
    st["2connected_after"] = s.connected2_after;
    j["steps"].push_back(st);
  }
  j["audit"] = nlohmann::ordered_json::array();
  for (const auto& e : audit.entries)
    j["audit"].push_back({{"step", e.step}, {"check", e.check}, {"passed", e.passed}, {"detail", e.detail}});
  return j;
}

Graph graph_argument(const std::string& g6, const std::string& file) {
  if (!g6.empty()) return from_graph6(g6);
  if (file.empty()) throw UsageError("give a graph6 string or --file");
  auto gs = read_graph6_file(file);
  if (gs.size() != 1) throw UsageError(file + " must hold exactly one graph");
  return gs.front();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long-cycle stability toolkit: constructions, exact circumference and theorem sweeps"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a family member and print it as graph6");
  std::string family;
  int cn = 0, ck = 0, ca = -1, ct = -1, cb = 0, cj = 0;
  std::vector<std::string> components, deletions;
  std::string a1_set, a2_set;
  bool show_parts = false;
  construct->add_option("--family", family, "H, G1..G8, F0..F4, F4', F(A,B,A1,A2)")->required();
  construct->add_option("--n", cn, "order");
  construct->add_option("--k", ck, "cycle length bound");
  construct->add_option("--a", ca, "clique-side size for H");
  construct->add_option("--t", ct, "t (defaults to floor((k-1)/2); 4 for F families)");
  construct->add_option("--b", cb, "|B| for G2/G3 or F(A,B,A1,A2)");
  construct->add_option("--j", cj, "|J| for G2");
  construct->add_option("--component", components, "size:p:q:anchor, repeatable");
  construct->add_option("--delete", deletions, "removed A-B edge i:j for F families, repeatable");
  construct->add_option("--a1", a1_set, "A1 indices, comma separated");
  construct->add_option("--a2", a2_set, "A2 indices, comma separated");
  construct->add_flag("--parts", show_parts, "also print the named parts");

  // check
  auto* check = app.add_subcommand("check", "Report structure of one graph");
  std::string check_g6, check_file;
  int check_k = 0;
  check->add_option("graph6", check_g6, "graph6 string");
  check->add_option("--file", check_file, "graph6 file with one graph");
  check->add_option("--k", check_k, "classify against G(n,k)");
  bool check_quick = false;
  check->add_flag("--quick", check_quick, "skip the cycle and path searches");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a theorem sweep");
  std::string mode, source = "enum", vfile, format = "text", out_path;
  int vk = 0, n_min = 0, n_max = -1, jobs = 1, samples = 1000, variants = 3;
  double density = 0.5;
  std::uint64_t seed = 1;
  const std::vector<std::string> modes = {"theorem-t3", "theorem-main", "theorem-t3small", "corollary-3con",
                                          "kopylov", "seven-cycle", "paths", "apex", "bridges", "property",
                                          "procedure-grid", "family-profile", "splits", "extremal-grid",
                                          "contraction"};
  verify->add_option("--mode", mode, "sweep")->required()->check(CLI::IsMember(modes));
  verify->add_option("--k", vk, "k");
  verify->add_option("--n-min", n_min, "smallest order");
  verify->add_option("--n-max", n_max, "largest order (defaults to --n-min)");
  verify->add_option("--source", source, "enum, file, grid or random")->check(CLI::IsMember({"enum", "file", "grid", "random"}));
  verify->add_option("--file", vfile, "graph6 input for --source file");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--samples", samples, "random samples (per class for property)");
  verify->add_option("--density", density, "edge density for --source random");
  verify->add_option("--variants", variants, "edge-deleted variants per grid member (procedure-grid)");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", out_path, "output file (stdout if omitted)");
  std::string g6_reading = "weak";
  int k7_inner_t = 2;
  verify->add_option("--g6-reading", g6_reading, "isolated-vertex condition of G6(n,8): weak or strong")
      ->check(CLI::IsMember({"weak", "strong"}));
  verify->add_option("--k7-inner-t", k7_inner_t, "t for the k=6 classes inside G(n,7)");

  // procedure
  auto* procedure = app.add_subcommand("procedure", "Run and audit the contraction procedure");
  std::string proc_g6, proc_file, trace_path;
  int proc_k = 0;
  procedure->add_option("graph6", proc_g6, "graph6 string");
  procedure->add_option("--file", proc_file, "graph6 file with one graph");
  procedure->add_option("--k", proc_k, "k")->required();
  procedure->add_option("--trace", trace_path, "write the trace and audit as JSON");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Run the classical theorem suite");
  ClassicalLimits limits;
  std::string oformat = "text", oout;
  int ojobs = 1;
  oracle->add_option("--max-n", limits.erdos_max_n, "largest order for the all-graph checks");
  oracle->add_option("--nonham-max-n", limits.nonham_max_n, "largest order for the non-hamiltonian bound");
  oracle->add_option("--jobs", ojobs, "worker threads")->check(CLI::PositiveNumber);
  oracle->add_option("--format", oformat, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  oracle->add_option("--out", oout, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*construct) {
      auto f = parse_family(family);
      if (!f) throw UsageError("unknown family " + family);
      LabeledConstruction m;
      if (*f == Family::H) {
        m = build_H(cn, ck, ca >= 0 ? ca : t_of(ck));
      } else if (*f >= Family::F0) {
        FFamilySpec spec{*f, ct >= 0 ? ct : 4, {}, cb, {}, {}};
        for (const auto& d : deletions) {
          auto v = split_ints(d, ':');
          if (v.size() != 2) throw UsageError("--delete wants i:j");
          spec.deletions.emplace_back(v[0], v[1]);
        }
        if (!a1_set.empty()) spec.a1_set = split_ints(a1_set, ',');
        if (!a2_set.empty()) spec.a2_set = split_ints(a2_set, ',');
        m = build_F_member(spec);
      } else {
        ClassSpec spec{*f, cn, ck, ct, cb, cj, {}};
        for (const auto& c : components) {
          auto v = split_ints(c, ':');
          if (v.size() != 4) throw UsageError("--component wants size:p:q:anchor");
          spec.components.push_back({v[0], v[1], v[2], v[3]});
        }
        m = build_class_member(spec);
      }
      std::cout << to_graph6(m.graph) << '\n';
      if (show_parts)
        for (const auto& [name, s] : m.parts) std::cout << name << ' ' << set_text(s) << '\n';
      return 0;
    }

    if (*check) {
      Graph g = graph_argument(check_g6, check_file);
      std::cout << "n " << g.order() << "\ne " << g.size() << "\nconnected " << is_connected(g)
                << "\n2-connected " << is_2_connected(g) << "\n3-connected " << is_3_connected(g) << '\n';
      std::cout << "edges";
      for (auto e : g.edges()) std::cout << ' ' << e.u << '-' << e.v;
      std::cout << '\n';
      if (check_quick) return 0;
      auto c = longest_cycle(g);
      std::cout << "circumference " << c.length << "\nlongest path " << longest_path(g).length << '\n';
      if (check_k > 0) {
        try {
          auto v = classify_stability(g, check_k);
          std::cout << "verdict " << verdict_name(v.kind);
          if (v.witness) std::cout << ' ' << v.witness->label << " A=" << set_text(v.witness->A);
          if (v.threshold) std::cout << " threshold " << *v.threshold;
          std::cout << '\n';
        } catch (const ParameterError& e) {
          std::cout << "verdict n/a (" << e.what() << ")\n";
        }
      }
      return 0;
    }

    if (*procedure) {
      Graph g = graph_argument(proc_g6, proc_file);
      auto tr = basic_procedure(g, proc_k);
      auto audit = audit_trace(tr);
      for (const auto& s : tr.steps)
        std::cout << rule_name(s.rule) << " edge " << s.edge.u << "," << s.edge.v << " n " << s.n_before << "->"
                  << s.n_after << " e " << s.e_before << "->" << s.e_after << '\n';
      for (const auto& note : tr.notes) std::cout << "note: " << note << '\n';
      std::cout << "final " << to_graph6(tr.final_graph) << "\naudit " << (audit.ok() ? "ok" : "FAILED") << " ("
                << audit.entries.size() << " checks, " << audit.failures() << " failures)\n";
      for (const auto& e : audit.entries)
        if (!e.passed) std::cout << "  step " << e.step << ": " << e.check << ' ' << e.detail << '\n';
      if (!trace_path.empty()) write_output(trace_json(tr, audit).dump(2), trace_path);
      return audit.ok() ? 0 : kExitViolations;
    }

    if (*oracle) {
      limits.dirac_max_n = limits.path_lemma_max_n = limits.chvatal_max_n = limits.closure_max_n =
          limits.enomoto_max_n = limits.erdos_max_n;
      limits.posa_max_n = std::min(limits.posa_max_n, limits.erdos_max_n);
      SweepOptions opts;
      opts.jobs = ojobs;
      auto reps = classical_suite(limits, opts);
      write_output(render(reps, oformat), oout);
      return exit_for(reps);
    }

    // verify
    SweepOptions opts;
    opts.jobs = jobs;
    opts.classify.g6 = g6_reading == "strong" ? G6Reading::Strong : G6Reading::Weak;
    opts.classify.k7_inner_t = k7_inner_t;
    std::vector<VerificationReport> reps;
    if (n_max < 0) n_max = n_min;
    auto source_for = [&](int n) {
      GraphSource s;
      s.n = n;
      s.n_max = n;
      s.k = vk;
      s.seed = seed;
      s.samples = samples;
      s.density = density;
      s.path = vfile;
      if (source == "enum") s.kind = GraphSource::Kind::Enumeration;
      else if (source == "file") s.kind = GraphSource::Kind::Graph6File;
      else if (source == "grid") s.kind = GraphSource::Kind::ConstructionGrid;
      else s.kind = GraphSource::Kind::Random;
      return s;
    };
    auto per_n = [&](GraphFilter filter, auto&& sweep) {
      if (source == "file") {
        auto s = source_for(0);
        auto gs = load_graphs(s, filter);
        opts.coverage = coverage_mode(s);
        auto r = sweep(std::span<const Graph>(gs));
        r.param("source", describe(s));
        reps.push_back(r);
        return;
      }
      if (n_min < 1) throw UsageError("--n-min is required for this source");
      for (int n = n_min; n <= n_max; ++n) {
        auto s = source_for(n);
        auto gs = load_graphs(s, filter);
        opts.coverage = coverage_mode(s);
        auto r = sweep(std::span<const Graph>(gs));
        r.param("n", n);
        r.param("source", describe(s));
        reps.push_back(r);
      }
    };
    auto need_k = [&] {
      if (vk < 4) throw UsageError("--k is required (k >= 4)");
    };

    if (auto m = parse_mode(mode)) {
      need_k();
      per_n(GraphFilter::All, [&](std::span<const Graph> gs) { return stability_sweep(gs, vk, *m, opts); });
    } else if (mode == "kopylov") {
      need_k();
      per_n(GraphFilter::TwoConnected, [&](std::span<const Graph> gs) { return kopylov_sweep(gs, vk, opts); });
    } else if (mode == "seven-cycle") {
      per_n(GraphFilter::TwoConnected, [&](std::span<const Graph> gs) { return seven_cycle_corollary_sweep(gs, opts); });
    } else if (mode == "paths") {
      need_k();
      per_n(GraphFilter::Connected, [&](std::span<const Graph> gs) { return path_sweep(gs, vk, opts); });
    } else if (mode == "apex") {
      per_n(GraphFilter::Connected, [&](std::span<const Graph> gs) { return apex_sweep(gs, opts); });
    } else if (mode == "bridges") {
      per_n(GraphFilter::TwoConnected, [&](std::span<const Graph> gs) { return bridge_claims_sweep(gs, opts); });
    } else if (mode == "property") {
      need_k();
      reps.push_back(stability_property_check(vk, samples, seed, opts));
    } else if (mode == "procedure-grid") {
      need_k();
      reps.push_back(procedure_grid_audit(vk, n_max < vk ? 16 : n_max, variants, seed, opts));
    } else if (mode == "family-profile") {
      reps.push_back(path_profile_check(opts));
    } else if (mode == "splits") {
      reps.push_back(split_suite(opts));
    } else if (mode == "extremal-grid") {
      need_k();
      reps.push_back(extremal_grid_check(vk, vk, n_max < vk ? 14 : n_max, opts));
    } else if (mode == "contraction") {
      reps = contraction_suite({}, opts);
    }
    write_output(render(reps, format), out_path);
    return exit_for(reps);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
