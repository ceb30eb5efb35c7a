#pragma once

#include <atomic>
#include <optional>
#include <utility>

#include "treepack/reduction.hpp"

namespace treepack {

// Line graph: one vertex per edge id of g, two distinct edges adjacent
// iff they share an endpoint (parallel edges are adjacent). Simple output;
// edges ordered by the underlying id pairs.
MultiGraph line_graph(const MultiGraph& g);

// True iff every two distinct edges of g share an endpoint.
bool line_graph_is_complete(const MultiGraph& g);

enum class CorePolicy { LowestEdge, HighestEdge };

struct CoreResult {
  MultiGraph core;
  std::vector<int> provenance;  // core edge id -> original edge id
};

// Core of a connected, essentially 3-edge-connected graph whose line
// graph is not complete: delete the degree-1 vertices, then suppress each
// degree-2 vertex by contracting one incident edge (the policy picks
// which), iterating to fixpoint. A degree-2 vertex whose two edges are
// parallel collapses the same way (the twin edge becomes a loop and
// disappears). The result is checked to be at least 3-edge-connected.
CoreResult core(const MultiGraph& g, CorePolicy policy = CorePolicy::LowestEdge);

// The same suppression fixpoint without the precondition checks; used
// where the caller handles the degenerate shapes itself.
CoreResult suppress_to_core(const MultiGraph& g,
                            CorePolicy policy = CorePolicy::LowestEdge);

// Walk with no repeated edge. Internal vertices are all stops except the
// two ends of the walk; dominating means every edge of the graph touches
// an internal vertex; spanning means dominating and visiting every
// vertex.
struct Trail {
  std::vector<int> edge_walk;
  std::vector<int> vertex_walk;  // edge_walk.size() + 1 entries (1 if empty)
  bool dominating = false;
  bool spanning = false;
};

enum class TrailMode { Spanning, Dominating };
enum class SearchStatus { Found, NotFound, Inconclusive };

struct SearchLimits {
  long long node_budget = 50'000'000;
  const std::atomic<bool>* cancel = nullptr;  // optional cooperative stop
};

struct TrailSearch {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Trail> trail;
};

// Backtracking search for a trail of the requested class; with `ends`
// given the walk must start with e1 and end with e2 (e1 != e2). Exceeding
// the budget yields Inconclusive, never NotFound.
TrailSearch find_trail(const MultiGraph& g, TrailMode mode,
                       std::optional<std::pair<int, int>> ends = std::nullopt,
                       SearchLimits limits = {});

// Batched form of the same search: pair(a,b) is set iff some spanning
// trail has end edges {a,b}. One tree walk per start edge instead of one
// per pair.
struct TrailPairMatrix {
  int edge_count = 0;
  std::vector<char> pair;  // row-major edge_count x edge_count, symmetric
  bool complete = false;   // false when the budget ran out
  bool at(int a, int b) const { return pair[a * edge_count + b] != 0; }
};
TrailPairMatrix spanning_trail_pairs(const MultiGraph& g,
                                     SearchLimits limits = {});

// True iff {e1, e2} is not an essential edge cut, i.e. removing both
// leaves at most one component containing an edge. Requires a graph with
// two edge-disjoint spanning trees (checked), in which case this equals
// the existence of a spanning (e1, e2)-trail.
bool catlin_lai_predicate(const MultiGraph& g, int e1, int e2);

// Every vertex pair joined by a Hamilton path (per-source bitmask DP over
// the underlying simple graph). Unknown above max_vertices.
Ternary is_hamilton_connected(const MultiGraph& g, int max_vertices = 10);

// Line-graph Hamilton-connectedness pipeline for a connected, essentially
// 3-edge-connected input: hypothesis translation, core construction and
// re-check, packing verdict, spanning-trailability, and a direct check of
// the line graph when it is small enough.
struct CorollaryReport {
  bool hyp_essential5 = false;
  bool hyp_two_essential8 = false;
  bool hypotheses_met = false;

  bool line_graph_complete = false;
  int line_graph_vertices = 0;

  int core_vertices = 0;
  int core_edges = 0;
  bool core_lambda3 = false;
  bool core_essential5 = false;
  bool core_two_essential8 = false;
  bool core_tau_ge2 = false;
  SearchStatus core_spanning_trail = SearchStatus::NotFound;

  // Certified implication chain fired: core packs two trees and carries a
  // spanning trail, so the line graph is Hamilton-connected.
  bool chain_conclusion = false;
  std::optional<bool> line_hamilton_connected;  // direct check when small
  std::string verdict;
};
CorollaryReport corollary_pipeline(const MultiGraph& g, int line_bound = 10,
                                   SearchLimits limits = {});

}  // namespace treepack
