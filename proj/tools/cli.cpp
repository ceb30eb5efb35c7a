// treepack command line: multigraph analysis, spanning-tree packing, the
// contraction pipeline, line-graph/core machinery, threshold tables and
// counterexample hunts over generated graphs. Graphs travel in the MEL
// text format; reports are JSON lines.
//
// Exit codes: 0 ok/holds, 1 counterexample found, 2 input error,
// 3 hypotheses or requested property not met.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "treepack/connectivity.hpp"
#include "treepack/errors.hpp"
#include "treepack/generate.hpp"
#include "treepack/hunt.hpp"
#include "treepack/line_hamilton.hpp"
#include "treepack/mel.hpp"
#include "treepack/records.hpp"
#include "treepack/reduction.hpp"
#include "treepack/thresholds.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNotMet = 3;

treepack::MultiGraph load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw treepack::input_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return treepack::parse_mel(text);
}

std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "absent";
}

// "A..B" or a single number.
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int cmd_analyze(const std::string& path, const std::vector<int>& rs, int k) {
  using namespace treepack;
  MultiGraph g = load_graph(path);
  DegreeProfile deg = degree_profile(g);
  std::cout << "vertices " << g.vertex_count() << "\n";
  std::cout << "edges " << g.edge_count() << "\n";
  std::cout << "min_degree " << deg.min_degree << "\n";
  std::cout << "max_degree " << deg.max_degree << "\n";
  std::cout << "multiplicity " << multiplicity(g) << "\n";
  std::cout << "connected " << (is_connected(g) ? "yes" : "no") << "\n";
  int lambda = (g.vertex_count() >= 2 && is_connected(g))
                   ? global_min_edge_cut(g).value
                   : 0;
  std::cout << "lambda " << lambda << "\n";
  for (int r : rs) {
    auto v = r_essential_value(g, r);
    std::cout << r << "_essential_lambda " << opt_str(v) << "\n";
  }
  std::cout << "kappa " << vertex_connectivity(g) << "\n";
  try {
    std::cout << "essential_kappa " << opt_str(essential_vertex_connectivity(g))
              << "\n";
  } catch (const input_error&) {
    std::cout << "essential_kappa skipped (subset bound exceeded)\n";
  }
  auto tau = spanning_tree_packing_number(g);
  std::cout << "tau " << (tau ? std::to_string(*tau) : "unbounded") << "\n";
  std::cout << "exception " << to_string(classify_exception(g, k)) << "\n";
  return kExitOk;
}

int cmd_pack(const std::string& path, int k, bool want_certificate) {
  using namespace treepack;
  MultiGraph g = load_graph(path);
  PackResult r = pack_spanning_trees(g, k, want_certificate ? 10 : 0);
  if (r.feasible()) {
    std::cout << "feasible " << k << "\n";
    for (size_t t = 0; t < r.packing->trees.size(); ++t) {
      std::cout << "tree " << t << ":";
      for (int id : r.packing->trees[t]) std::cout << " " << id;
      std::cout << "\n";
    }
    return kExitOk;
  }
  std::cout << "infeasible " << k << "\n";
  if (r.certificate) {
    std::cout << "certificate crossing " << r.certificate->crossing_count
              << " blocks " << r.certificate->parts.size() << " bound "
              << r.certificate->bound << "\n";
    for (const auto& part : r.certificate->parts) {
      std::cout << "block:";
      for (int v : part) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return kExitNotMet;
}

int cmd_reduce(const std::string& path, int k, const std::string& out_path) {
  using namespace treepack;
  MultiGraph g = load_graph(path);
  auto r = reduce(g, k);
  for (size_t i = 0; i < r.trace.steps.size(); ++i) {
    const auto& step = r.trace.steps[i];
    nlohmann::json j;
    j["step"] = i;
    j["contracted_vertices"] = step.contracted_vertices;
    j["internal_trees"] = step.internal_packing.trees;
    std::cout << j.dump() << "\n";
  }
  std::cerr << "reduced to " << r.graph.vertex_count() << " vertices, "
            << r.graph.edge_count() << " edges in " << r.trace.steps.size()
            << " steps\n";
  std::string mel = emit_mel(r.graph);
  if (out_path.empty() || out_path == "-") {
    std::cout << mel;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw input_error("cannot open " + out_path);
    out << mel;
  }
  return kExitOk;
}

int cmd_linegraph(const std::string& path) {
  using namespace treepack;
  std::cout << emit_mel(line_graph(load_graph(path)));
  return kExitOk;
}

int cmd_core(const std::string& path) {
  using namespace treepack;
  MultiGraph g = load_graph(path);
  CoreResult r = core(g);
  std::cerr << "core has " << r.core.vertex_count() << " vertices, "
            << r.core.edge_count() << " edges\n";
  std::cout << emit_mel(r.core);
  std::cout << "# provenance:";
  for (int id : r.provenance) std::cout << " " << id;
  std::cout << "\n";
  return kExitOk;
}

int check_exit(bool hypotheses_met, bool counterexample) {
  if (counterexample) return kExitCounterexample;
  if (!hypotheses_met) return kExitNotMet;
  return kExitOk;
}

int cmd_check(const std::string& path, const std::string& theorem, int m,
              int k) {
  using namespace treepack;
  MultiGraph g = load_graph(path);
  if (theorem == "main1") {
    GraphRecord r = check_main1(g);
    std::cout << record_to_json(r).dump() << "\n";
    return check_exit(r.hypotheses_met, r.counterexample);
  }
  if (theorem == "main2") {
    GraphRecord r = check_main2(g, m, k);
    std::cout << record_to_json(r).dump() << "\n";
    return check_exit(r.hypotheses_met, r.counterexample);
  }
  // corollary
  CorollaryReport r = corollary_pipeline(g);
  nlohmann::json j;
  j["hyp_essential5"] = r.hyp_essential5;
  j["hyp_two_essential8"] = r.hyp_two_essential8;
  j["hypotheses_met"] = r.hypotheses_met;
  j["line_graph_complete"] = r.line_graph_complete;
  j["line_graph_vertices"] = r.line_graph_vertices;
  j["core_vertices"] = r.core_vertices;
  j["core_edges"] = r.core_edges;
  j["core_lambda3"] = r.core_lambda3;
  j["core_essential5"] = r.core_essential5;
  j["core_two_essential8"] = r.core_two_essential8;
  j["core_tau_ge2"] = r.core_tau_ge2;
  j["core_spanning_trail"] =
      r.core_spanning_trail == SearchStatus::Found
          ? "found"
          : (r.core_spanning_trail == SearchStatus::NotFound ? "not_found"
                                                             : "inconclusive");
  j["chain_conclusion"] = r.chain_conclusion;
  j["line_hamilton_connected"] =
      r.line_hamilton_connected ? nlohmann::json(*r.line_hamilton_connected)
                                : nlohmann::json();
  j["verdict"] = r.verdict;
  std::cout << j.dump() << "\n";
  if (!r.hypotheses_met) return kExitNotMet;
  bool falsified = r.line_hamilton_connected && !*r.line_hamilton_connected &&
                   r.chain_conclusion;
  return falsified ? kExitCounterexample : kExitOk;
}

int cmd_thresholds(int k, bool as_json) {
  using namespace treepack;
  auto rows = bounds_report(k);
  if (as_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
      out.push_back({{"m", row.m},
                     {"f", row.f.str()},
                     {"laili", row.laili.str()},
                     {"floor_6k4", row.floor_6k4.str()},
                     {"branch_low", row.branch_low.str()},
                     {"branch_high", row.branch_high.str()},
                     {"dominates", row.dominates},
                     {"below_twice", row.below_twice}});
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "k=" << k << "\n";
  std::printf("%-5s %-12s %-12s %-10s %-12s %-12s %-7s %s\n", "m", "f(m,k)",
              "laili", "6k-4", "low", "high", "f>=max", "f<2*laili");
  for (const auto& row : rows) {
    std::printf("%-5d %-12s %-12s %-10s %-12s %-12s %-7s %s\n", row.m,
                row.f.str().c_str(), row.laili.str().c_str(),
                row.floor_6k4.str().c_str(), row.branch_low.str().c_str(),
                row.branch_high.str().c_str(), row.dominates ? "yes" : "NO",
                row.below_twice ? "yes" : "NO");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multigraph spanning-tree packing toolkit"};
  app.require_subcommand(1);

  std::string path, theorem, out_path, n_range = "3..8", e_range = "4..16";
  std::vector<int> rs{1, 2, 3};
  int k = 2, m = 3, mult_max = 2, lambda_min = 1, jobs = 1;
  long long count = 1000;
  std::uint64_t seed = 1;
  bool want_certificate = false, as_json = false;

  auto* analyze = app.add_subcommand("analyze", "connectivity profile");
  analyze->add_option("file", path)->required();
  analyze->add_option("--r", rs, "r values for r-essential connectivity");
  analyze->add_option("--k", k, "k used for exception classification");

  auto* pack = app.add_subcommand("pack", "pack k edge-disjoint spanning trees");
  pack->add_option("file", path)->required();
  pack->add_option("--k", k)->required();
  pack->add_flag("--certificate", want_certificate,
                 "search an infeasibility partition");

  auto* reduce_cmd = app.add_subcommand("reduce", "contraction pipeline");
  reduce_cmd->add_option("file", path)->required();
  reduce_cmd->add_option("--k", k)->required();
  reduce_cmd->add_option("--out", out_path, "write the reduced graph here");

  auto* lg = app.add_subcommand("linegraph", "emit the line graph");
  lg->add_option("file", path)->required();

  auto* core_cmd = app.add_subcommand("core", "suppressed core");
  core_cmd->add_option("file", path)->required();

  auto* check = app.add_subcommand("check", "run one theorem checker");
  check->add_option("file", path)->required();
  check->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"main1", "main2", "corollary"}));
  check->add_option("--m", m);
  check->add_option("--k", k);

  auto* hunt_cmd = app.add_subcommand("hunt", "counterexample hunt");
  hunt_cmd->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"main1", "main2"}));
  hunt_cmd->add_option("--m", m);
  hunt_cmd->add_option("--k", k);
  hunt_cmd->add_option("--n", n_range, "vertex range A..B");
  hunt_cmd->add_option("--edges", e_range, "edge range A..B");
  hunt_cmd->add_option("--mult-max", mult_max);
  hunt_cmd->add_option("--lambda-min", lambda_min);
  hunt_cmd->add_option("--seed", seed);
  hunt_cmd->add_option("--count", count);
  hunt_cmd->add_option("--jobs", jobs);
  hunt_cmd->add_option("--out", out_path, "JSON-lines report file");

  auto* thresholds_cmd = app.add_subcommand("thresholds", "bound table");
  thresholds_cmd->add_option("--k", k)->required();
  thresholds_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, rs, std::max(k, 2));
    if (pack->parsed()) return cmd_pack(path, k, want_certificate);
    if (reduce_cmd->parsed()) return cmd_reduce(path, k, out_path);
    if (lg->parsed()) return cmd_linegraph(path);
    if (core_cmd->parsed()) return cmd_core(path);
    if (check->parsed()) return cmd_check(path, theorem, m, k);
    if (thresholds_cmd->parsed()) return cmd_thresholds(k, as_json);
    if (hunt_cmd->parsed()) {
      treepack::HuntSpec spec;
      auto [n_lo, n_hi] = parse_range(n_range);
      auto [e_lo, e_hi] = parse_range(e_range);
      spec.gen.n_min = n_lo;
      spec.gen.n_max = n_hi;
      spec.gen.edges_min = e_lo;
      spec.gen.edges_max = e_hi;
      spec.gen.mult_cap = mult_max;
      spec.gen.lambda_min = lambda_min;
      spec.gen.master_seed = seed;
      spec.gen.count = count;
      spec.theorem = theorem == "main1" ? treepack::TheoremSel::Main1
                                        : treepack::TheoremSel::Main2;
      spec.m = m;
      spec.k = k;
      spec.jobs = jobs;
      spec.out_path = out_path;
      auto summary = treepack::hunt(spec);
      std::cout << treepack::summary_to_json(summary).dump() << "\n";
      return summary.counterexamples > 0 ? kExitCounterexample : kExitOk;
    }
  } catch (const treepack::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
