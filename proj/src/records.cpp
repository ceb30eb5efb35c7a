#include "treepack/records.hpp"

#include <chrono>
#include <set>

#include "treepack/errors.hpp"
#include "treepack/packing.hpp"
#include "treepack/reduction.hpp"
#include "treepack/thresholds.hpp"

namespace treepack {

namespace {

nlohmann::json opt_int(const std::optional<int>& v) {
  if (!v) return nullptr;
  return *v;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// value >= threshold with the threshold a rational and the value an
// integer; absent values pass every threshold.
bool meets(const std::optional<int>& value, const Rational& threshold) {
  if (!value) return true;
  return Rational(*value) >= threshold;
}

}  // namespace

nlohmann::json record_to_json(const GraphRecord& r) {
  nlohmann::json j;
  j["graph_id"] = r.graph_id;
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["edge_count"] = r.edge_count;
  j["lambda"] = r.profile.lambda;
  j["essential_lambda"] = opt_int(r.profile.essential_lambda);
  j["two_essential_lambda"] = opt_int(r.profile.two_essential_lambda);
  j["kappa"] = r.profile.kappa;
  j["essential_kappa"] = opt_int(r.profile.essential_kappa);
  j["tau"] = opt_int(r.tau);
  j["theorem"] = r.theorem;
  j["m"] = opt_int(r.m_param);
  j["k"] = r.k_param;
  j["hyp_lambda"] = r.hyp_lambda;
  j["hyp_essential"] =
      r.hyp_essential ? nlohmann::json(*r.hyp_essential) : nlohmann::json();
  j["hyp_two_essential"] = r.hyp_two_essential;
  j["hypotheses_met"] = r.hypotheses_met;
  j["conclusion"] = r.conclusion;
  j["exception"] = to_string(r.exception);
  j["counterexample"] = r.counterexample;
  j["runtime_ms"] =
      r.runtime_ms ? nlohmann::json(*r.runtime_ms) : nlohmann::json();
  return j;
}

GraphRecord check_main2(const MultiGraph& g, int m, int k) {
  BoundSymbols bounds;
  try {
    bounds = make_bound_symbols(m, k);
  } catch (const input_error&) {
    throw input_error("check_main2: need k+1 <= m <= 2k-1");
  }
  auto start = std::chrono::steady_clock::now();

  GraphRecord r;
  r.n = g.vertex_count();
  r.edge_count = g.edge_count();
  r.theorem = "main2";
  r.m_param = m;
  r.k_param = k;
  r.profile = connectivity_profile(g);
  r.tau = spanning_tree_packing_number(g);
  r.exception = classify_exception(g, k);

  r.hyp_lambda = r.profile.lambda >= m;
  r.hyp_two_essential = meets(r.profile.two_essential_lambda, bounds.h);
  r.hypotheses_met = r.hyp_lambda && r.hyp_two_essential &&
                     r.exception == ExceptionForm::None;
  r.conclusion = !r.tau || *r.tau >= k;
  r.counterexample = r.hypotheses_met && !r.conclusion &&
                     r.exception == ExceptionForm::None;
  r.runtime_ms = elapsed_ms(start);
  return r;
}

GraphRecord check_main1(const MultiGraph& g) {
  auto start = std::chrono::steady_clock::now();

  GraphRecord r;
  r.n = g.vertex_count();
  r.edge_count = g.edge_count();
  r.theorem = "main1";
  r.k_param = 2;
  r.profile = connectivity_profile(g);
  r.tau = spanning_tree_packing_number(g);
  r.exception = classify_exception(g, 2);

  r.hyp_lambda = r.profile.lambda >= 3;
  r.hyp_essential =
      !r.profile.essential_lambda || *r.profile.essential_lambda >= 5;
  r.hyp_two_essential =
      !r.profile.two_essential_lambda || *r.profile.two_essential_lambda >= 8;
  r.hypotheses_met = r.hyp_lambda && *r.hyp_essential && r.hyp_two_essential;
  r.conclusion = !r.tau || *r.tau >= 2;
  r.counterexample = r.hypotheses_met && !r.conclusion &&
                     r.exception == ExceptionForm::None;
  r.runtime_ms = elapsed_ms(start);
  return r;
}

StructuralFlags check_structural_lemmas(const MultiGraph& g) {
  StructuralFlags f;
  DegreeProfile deg = degree_profile(g);
  f.min_degree_3 = g.vertex_count() == 0 || deg.min_degree >= 3;

  f.no_adjacent_3_vertices = true;
  for (const Edge& e : g.edges())
    if (deg.degree[e.u] == 3 && deg.degree[e.v] == 3)
      f.no_adjacent_3_vertices = false;

  f.path_degree_sum_12 = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<int> nbrs;
    for (int id : g.incident(v)) nbrs.insert(g.other_end(id, v));
    for (auto it = nbrs.begin(); it != nbrs.end(); ++it) {
      for (auto jt = std::next(it); jt != nbrs.end(); ++jt) {
        if (deg.degree[*it] + deg.degree[v] + deg.degree[*jt] < 12)
          f.path_degree_sum_12 = false;
      }
    }
  }

  int surplus = 0;
  for (int v = 0; v < g.vertex_count(); ++v) surplus += deg.degree[v] - 4;
  f.degree_surplus_nonneg = surplus >= 0;
  return f;
}

}  // namespace treepack
