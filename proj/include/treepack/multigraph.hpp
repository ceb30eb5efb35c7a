#pragma once

#include <string>
#include <utility>
#include <vector>

namespace treepack {

// Loop-free multigraph with individually identified parallel edges.
//
// Edge ids are dense in [0, m) and follow construction order; parallel
// edges are distinct records with distinct ids. Instances are immutable
// after construction, so they can be shared freely across threads.
struct Edge {
  int u = 0;
  int v = 0;
};

class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Edge ids incident to v, ascending.
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  int degree(int v) const { return static_cast<int>(incident_[v].size()); }
  int other_end(int edge_id, int v) const {
    const Edge& e = edges_[edge_id];
    return e.u == v ? e.v : e.u;
  }

  bool has_vertex(int v) const { return v >= 0 && v < n_; }
  bool has_edge_id(int id) const { return id >= 0 && id < edge_count(); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// Builds a graph from endpoint pairs; ids are assigned in input order.
// Rejects loops ("loops forbidden") and out-of-range endpoints.
MultiGraph build_graph(int n, const std::vector<std::pair<int, int>>& endpoints);

struct DegreeProfile {
  std::vector<int> degree;
  int min_degree = 0;  // 0 for edgeless graphs
  int max_degree = 0;
};
DegreeProfile degree_profile(const MultiGraph& g);

// e(X, Y): edges with one end in X and the other in Y, parallel edges
// counted with multiplicity. X and Y must be disjoint.
int edge_count_between(const MultiGraph& g, const std::vector<int>& xs,
                       const std::vector<int>& ys);

// Maximum number of edges between any vertex pair; 0 for edgeless graphs.
int multiplicity(const MultiGraph& g);

// Contraction identifies the two ends of each listed edge (componentwise
// for disconnected edge sets) and deletes every resulting loop, including
// parallel copies of contracted edges. Surviving vertices are reindexed
// densely, ordered by smallest original index; surviving edges keep their
// relative order.
struct ContractResult {
  MultiGraph graph;
  std::vector<int> vertex_map;   // original vertex -> contracted vertex
  std::vector<int> edge_origin;  // contracted edge id -> original edge id
};
ContractResult contract(const MultiGraph& g, const std::vector<int>& edge_ids);

struct VertexDeleteResult {
  MultiGraph graph;
  std::vector<int> vertex_map;   // original vertex -> new index, -1 if deleted
  std::vector<int> edge_origin;  // new edge id -> original edge id
};
VertexDeleteResult delete_vertices(const MultiGraph& g,
                                   const std::vector<int>& vertices);

struct EdgeDeleteResult {
  MultiGraph graph;              // same vertex set
  std::vector<int> edge_origin;  // new edge id -> original edge id
};
EdgeDeleteResult delete_edges(const MultiGraph& g,
                              const std::vector<int>& edge_ids);

struct InducedResult {
  MultiGraph graph;
  std::vector<int> vertex_map;   // original vertex -> new index, -1 outside
  std::vector<int> edge_origin;  // new edge id -> original edge id
};
InducedResult induced_subgraph(const MultiGraph& g,
                               const std::vector<int>& vertices);

struct Component {
  std::vector<int> vertices;  // ascending
  int edge_count = 0;         // parallel edges counted individually
};
// Connected components ordered by smallest contained vertex.
std::vector<Component> components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

// Shapes excluded by the packing theorem checkers: the (simple) K5 and
// multigraphs whose underlying simple graph is a triangle with bounded
// multiplicity.
enum class ExceptionForm { None, K5, FatTriangle };
const char* to_string(ExceptionForm f);

// K5 iff n=5 with 10 edges, multiplicity 1 and all degrees 4. FatTriangle
// iff the underlying simple graph is a triangle and multiplicity <= k-1.
ExceptionForm classify_exception(const MultiGraph& g, int k);

}  // namespace treepack
