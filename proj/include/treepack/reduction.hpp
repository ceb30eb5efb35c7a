#pragma once

#include <optional>

#include "treepack/multigraph.hpp"
#include "treepack/packing.hpp"
#include "treepack/thresholds.hpp"

namespace treepack {

enum class Ternary { False, True, Unknown };

// Parameter triple the packing theorems run on: tree count k,
// edge-connectivity floor m, and the two-essential threshold h that the
// pair induces. Only k+1 <= m <= 2k-1 is admissible.
struct BoundSymbols {
  int k = 2;
  int m = 3;
  Rational h;
};

// Validates the (m, k) window and fills h = f_threshold(m, k).
BoundSymbols make_bound_symbols(int m, int k);

// One contraction step: the vertex set collapsed in the graph at that
// stage, a verified packing of its induced subgraph (edge ids of that
// graph), and the maps into the next graph.
struct ReductionStep {
  std::vector<int> contracted_vertices;
  TreePacking internal_packing;
  std::vector<int> vertex_map;  // this graph -> next graph
  std::vector<int> edge_origin; // next graph edge id -> this graph edge id
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

// Smallest vertex set (ties lexicographic) whose induced subgraph packs k
// spanning trees: first any pair carrying >= k parallel edges, then
// subsets by increasing size with the density filter e >= k(size-1)
// applied before the packing test. Exhaustive at desk scale.
std::optional<std::vector<int>> find_contractible(const MultiGraph& g, int k);

// True iff no vertex subset of size >= 2 induces e >= k(size-1). The scan
// is exhaustive only up to exhaustive_bound vertices; beyond that a
// cheap multiplicity check may still prove False, otherwise Unknown.
Ternary is_reduced(const MultiGraph& g, int k, int exhaustive_bound = 16);

struct ReduceResult {
  MultiGraph graph;
  ReductionTrace trace;
};

// Contracts packable subgraphs until none remain. The input packs k trees
// iff the reduced graph does; the trace replays every step.
ReduceResult reduce(const MultiGraph& g, int k);

// Splices the per-step internal packings into a packing of the reduced
// graph, producing a verified packing of the original. Throws
// verification_error naming the first invariant that fails.
TreePacking lift_packing(const MultiGraph& g, const ReductionTrace& trace,
                         const TreePacking& reduced_packing);

// Sum over vertices of d(v) - 2k.
int degree_surplus(const MultiGraph& g, int k);

}  // namespace treepack
