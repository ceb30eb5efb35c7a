#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "treepack/connectivity.hpp"
#include "treepack/multigraph.hpp"

namespace treepack {

// One checker verdict for one graph. A counterexample needs all three of:
// hypotheses met, conclusion false, no excluded shape.
struct GraphRecord {
  long long graph_id = -1;
  std::uint64_t seed = 0;
  int n = 0;
  int edge_count = 0;
  ConnectivityProfile profile;
  std::optional<int> tau;  // nullopt: unbounded (n <= 1)

  std::string theorem;  // "main1" | "main2"
  std::optional<int> m_param;
  int k_param = 0;

  bool hyp_lambda = false;
  std::optional<bool> hyp_essential;  // main1 only
  bool hyp_two_essential = false;
  bool hypotheses_met = false;
  bool conclusion = false;
  ExceptionForm exception = ExceptionForm::None;
  bool counterexample = false;

  // Measured wall time; hunts write null so reports stay byte-identical
  // across runs.
  std::optional<double> runtime_ms;
};

nlohmann::json record_to_json(const GraphRecord& r);

// m-edge-connected and 2-essentially f(m,k)-edge-connected (no cut of a
// class counts as passing), not K5 or a fat triangle of multiplicity
// <= k-1  =>  k edge-disjoint spanning trees. Requires k+1 <= m <= 2k-1.
GraphRecord check_main2(const MultiGraph& g, int m, int k);

// 3-edge-connected, essentially 5- and 2-essentially 8-edge-connected
// =>  two edge-disjoint spanning trees.
GraphRecord check_main1(const MultiGraph& g);

// Local structure every minimum-degree-3 candidate must exhibit: no two
// adjacent 3-vertices, degree sum >= 12 on every 2-edge path, and total
// degree surplus over 4 nonnegative.
struct StructuralFlags {
  bool min_degree_3 = false;
  bool no_adjacent_3_vertices = false;
  bool path_degree_sum_12 = false;
  bool degree_surplus_nonneg = false;
  bool all() const {
    return min_degree_3 && no_adjacent_3_vertices && path_degree_sum_12 &&
           degree_surplus_nonneg;
  }
};
StructuralFlags check_structural_lemmas(const MultiGraph& g);

}  // namespace treepack
