#pragma once

#include <optional>
#include <string>

#include "treepack/multigraph.hpp"

namespace treepack {

// k pairwise edge-disjoint spanning trees, each a sorted edge-id set.
struct TreePacking {
  std::vector<std::vector<int>> trees;
};

// Nash-Williams/Tutte infeasibility witness: a vertex partition whose
// crossing-edge quota is too small for k trees.
struct PartitionCertificate {
  std::vector<std::vector<int>> parts;  // >= 2 blocks, ordered by smallest member
  int crossing_count = 0;
  int bound = 0;  // floor(crossing_count / (parts - 1))
};

struct PackResult {
  std::optional<TreePacking> packing;               // set iff feasible
  std::optional<PartitionCertificate> certificate;  // may accompany infeasible
  bool feasible() const { return packing.has_value(); }
};

// Incremental matroid-union augmentation: k forests, edges inserted in
// ascending id order, exchange search breadth-first. A returned packing is
// always verified; certificates are searched exhaustively only when
// n <= certificate_bound. Graphs with n <= 1 pack trivially (k empty
// trees).
PackResult pack_spanning_trees(const MultiGraph& g, int k,
                               int certificate_bound = 10);

// Largest k with a feasible packing; nullopt marks the unbounded case
// (n <= 1, where any number of empty trees spans). 0 iff disconnected.
std::optional<int> spanning_tree_packing_number(const MultiGraph& g);

struct PartitionBound {
  std::optional<int> value;  // nullopt when no >=2-block partition exists
  std::vector<std::vector<int>> parts;
};

// min over all partitions with >= 2 blocks of floor(crossing/(blocks-1)).
// Equals the packing number for connected graphs. Bell-number growth;
// refuses inputs above max_vertices.
PartitionBound partition_bound_oracle(const MultiGraph& g,
                                      int max_vertices = 10);

struct VerifyResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Checks every packing invariant against g: valid ids, pairwise
// disjointness, exactly max(n-1, 0) edges per tree, acyclicity, spanning.
VerifyResult verify_packing(const MultiGraph& g, const TreePacking& p);

}  // namespace treepack
