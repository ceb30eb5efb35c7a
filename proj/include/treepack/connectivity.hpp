#pragma once

#include <optional>

#include "treepack/multigraph.hpp"

namespace treepack {

// A bipartition edge cut. Any edge set witnessing an r-essential
// separation contains a bipartition cut of no larger size with the same
// property, so minima are taken over bipartitions only. side_a carries
// the distinguished side: vertex 0 for global and r-essential cuts, the
// s-side for st cuts.
struct Cut {
  std::vector<int> side_a;    // ascending, nonempty
  std::vector<int> side_b;    // ascending, nonempty
  std::vector<int> crossing;  // edge ids, ascending
  int value = 0;              // == crossing.size()
};

// Builds a Cut from a side-A indicator, recomputing crossing edges.
Cut make_cut(const MultiGraph& g, const std::vector<char>& in_a);
// Recomputes the crossing set from the sides and checks all Cut invariants.
bool cut_valid(const MultiGraph& g, const Cut& c);

// Minimum edge cut over all bipartitions (Stoer-Wagner, parallel edges as
// unit capacities). Disconnected inputs yield value 0 with a component
// bipartition as witness. Requires n >= 2.
Cut global_min_edge_cut(const MultiGraph& g);

// Minimum edge cut separating s from t (Dinic max-flow; the flow value is
// checked against the crossing count). side_a is the s-side. s != t.
Cut st_min_edge_cut(const MultiGraph& g, int s, int t);

struct REssentialCut {
  int value = 0;
  Cut cut;
};

// Minimum bipartition cut leaving a component with >= r edges on each
// side; nullopt when no such cut exists. Enumerates connected r-edge seed
// subgraphs, contracts every vertex-disjoint seed pair to terminals and
// takes st minimum cuts; ties broken by lexicographically smallest side_a.
// r must be >= 1; intended for connected inputs.
std::optional<REssentialCut> r_essential_edge_connectivity(const MultiGraph& g,
                                                           int r);

// Exhaustive minimum over all 2^(n-1)-1 bipartitions, checking component
// edge counts directly. Ground truth for the seed-pair algorithm; refuses
// inputs above max_vertices.
std::optional<REssentialCut> r_essential_brute_oracle(const MultiGraph& g,
                                                      int r,
                                                      int max_vertices = 14);

// Minimum vertex cut size; n-1 for complete graphs, 0 when disconnected.
int vertex_connectivity(const MultiGraph& g);

// Minimum size of a vertex set whose removal leaves at least two
// components that each contain an edge; nullopt when none exists. Subset
// search, exponential in n; refuses inputs above max_vertices.
std::optional<int> essential_vertex_connectivity(const MultiGraph& g,
                                                 int max_vertices = 20);

struct ConnectivityProfile {
  int lambda = 0;  // 0 when disconnected or n <= 1
  std::optional<int> essential_lambda;
  std::optional<int> two_essential_lambda;
  int kappa = 0;
  std::optional<int> essential_kappa;
};

// Full hierarchy for one graph. The r-essential values use the
// bipartition enumeration when n <= 10 (faster at that size) and the
// seed-pair algorithm otherwise; the two agree everywhere.
ConnectivityProfile connectivity_profile(const MultiGraph& g);

// r-essential value by whichever route fits the size; shared by the
// profile and the checkers.
std::optional<int> r_essential_value(const MultiGraph& g, int r);

struct HypothesisCheck {
  bool lambda_ok = false;
  bool essential_ok = false;
  bool two_essential_ok = false;
};

// lambda >= m, essential lambda >= h_ess, 2-essential lambda >= h_2ess.
// A connectivity class with no cut at all satisfies any threshold.
HypothesisCheck is_hypothesis(const MultiGraph& g, int m, int h_ess,
                              int h_2ess);

}  // namespace treepack
