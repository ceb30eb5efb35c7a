#include "treepack/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

void check_vertex_set(const MultiGraph& g, const std::vector<int>& vs,
                      const char* what) {
  for (int v : vs) {
    if (!g.has_vertex(v))
      throw input_error(std::string(what) + ": vertex index out of range");
  }
}

void check_edge_set(const MultiGraph& g, const std::vector<int>& es,
                    const char* what) {
  for (int e : es) {
    if (!g.has_edge_id(e))
      throw input_error(std::string(what) + ": unknown edge id");
  }
}

}  // namespace

MultiGraph::MultiGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw input_error("vertex count must be nonnegative");
  incident_.assign(n_, {});
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw input_error("edge endpoint out of range");
    if (e.u == e.v) throw input_error("loops forbidden");
    incident_[e.u].push_back(id);
    incident_[e.v].push_back(id);
  }
}

MultiGraph build_graph(int n,
                       const std::vector<std::pair<int, int>>& endpoints) {
  std::vector<Edge> edges;
  edges.reserve(endpoints.size());
  for (const auto& [u, v] : endpoints) edges.push_back({u, v});
  return MultiGraph(n, std::move(edges));
}

DegreeProfile degree_profile(const MultiGraph& g) {
  DegreeProfile p;
  p.degree.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) p.degree[v] = g.degree(v);
  if (!p.degree.empty()) {
    auto [lo, hi] = std::minmax_element(p.degree.begin(), p.degree.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

int edge_count_between(const MultiGraph& g, const std::vector<int>& xs,
                       const std::vector<int>& ys) {
  check_vertex_set(g, xs, "edge_count_between");
  check_vertex_set(g, ys, "edge_count_between");
  // 0 = outside, 1 = X, 2 = Y
  std::vector<char> side(g.vertex_count(), 0);
  for (int v : xs) side[v] = 1;
  for (int v : ys) {
    if (side[v] == 1) throw input_error("edge_count_between: sets overlap");
    side[v] = 2;
  }
  int count = 0;
  for (const Edge& e : g.edges())
    if (side[e.u] + side[e.v] == 3) ++count;
  return count;
}

int multiplicity(const MultiGraph& g) {
  std::unordered_map<long long, int> pair_count;
  int best = 0;
  for (const Edge& e : g.edges()) {
    int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    long long key = static_cast<long long>(a) * g.vertex_count() + b;
    best = std::max(best, ++pair_count[key]);
  }
  return best;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ContractResult contract(const MultiGraph& g, const std::vector<int>& edge_ids) {
  check_edge_set(g, edge_ids, "contract");
  Dsu dsu(g.vertex_count());
  std::vector<char> contracted(g.edge_count(), 0);
  for (int id : edge_ids) {
    contracted[id] = 1;
    dsu.unite(g.edge(id).u, g.edge(id).v);
  }
  // New indices are dense and ordered by the smallest original vertex of
  // each merged class.
  std::vector<int> vertex_map(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int r = dsu.find(v);
    if (vertex_map[r] == -1) vertex_map[r] = next++;
    vertex_map[v] = vertex_map[r];
  }
  std::vector<Edge> edges;
  std::vector<int> origin;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (contracted[id]) continue;
    int nu = vertex_map[g.edge(id).u];
    int nv = vertex_map[g.edge(id).v];
    if (nu == nv) continue;  // loop created by the identification
    edges.push_back({nu, nv});
    origin.push_back(id);
  }
  return {MultiGraph(next, std::move(edges)), std::move(vertex_map),
          std::move(origin)};
}

VertexDeleteResult delete_vertices(const MultiGraph& g,
                                   const std::vector<int>& vertices) {
  check_vertex_set(g, vertices, "delete_vertices");
  std::vector<char> gone(g.vertex_count(), 0);
  for (int v : vertices) gone[v] = 1;
  std::vector<int> vertex_map(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) vertex_map[v] = next++;
  std::vector<Edge> edges;
  std::vector<int> origin;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (gone[e.u] || gone[e.v]) continue;
    edges.push_back({vertex_map[e.u], vertex_map[e.v]});
    origin.push_back(id);
  }
  return {MultiGraph(next, std::move(edges)), std::move(vertex_map),
          std::move(origin)};
}

EdgeDeleteResult delete_edges(const MultiGraph& g,
                              const std::vector<int>& edge_ids) {
  check_edge_set(g, edge_ids, "delete_edges");
  std::vector<char> gone(g.edge_count(), 0);
  for (int e : edge_ids) gone[e] = 1;
  std::vector<Edge> edges;
  std::vector<int> origin;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (gone[id]) continue;
    edges.push_back(g.edge(id));
    origin.push_back(id);
  }
  return {MultiGraph(g.vertex_count(), std::move(edges)), std::move(origin)};
}

InducedResult induced_subgraph(const MultiGraph& g,
                               const std::vector<int>& vertices) {
  check_vertex_set(g, vertices, "induced_subgraph");
  std::vector<char> keep(g.vertex_count(), 0);
  for (int v : vertices) keep[v] = 1;
  std::vector<int> vertex_map(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep[v]) vertex_map[v] = next++;
  std::vector<Edge> edges;
  std::vector<int> origin;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (!keep[e.u] || !keep[e.v]) continue;
    edges.push_back({vertex_map[e.u], vertex_map[e.v]});
    origin.push_back(id);
  }
  return {MultiGraph(next, std::move(edges)), std::move(vertex_map),
          std::move(origin)};
}

std::vector<Component> components(const MultiGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<Component> result;
  std::vector<int> stack;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (comp[start] != -1) continue;
    int cid = static_cast<int>(result.size());
    result.push_back({});
    comp[start] = cid;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      result[cid].vertices.push_back(v);
      for (int id : g.incident(v)) {
        int w = g.other_end(id, v);
        if (comp[w] == -1) {
          comp[w] = cid;
          stack.push_back(w);
        }
      }
    }
    std::sort(result[cid].vertices.begin(), result[cid].vertices.end());
  }
  for (const Edge& e : g.edges()) ++result[comp[e.u]].edge_count;
  return result;
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() <= 1) return true;
  return components(g).size() == 1;
}

const char* to_string(ExceptionForm f) {
  switch (f) {
    case ExceptionForm::K5:
      return "k5";
    case ExceptionForm::FatTriangle:
      return "fat_triangle";
    default:
      return "none";
  }
}

ExceptionForm classify_exception(const MultiGraph& g, int k) {
  if (k < 2) throw input_error("classify_exception: k must be at least 2");
  if (g.vertex_count() == 5 && g.edge_count() == 10 && multiplicity(g) == 1) {
    bool all4 = true;
    for (int v = 0; v < 5; ++v) all4 = all4 && g.degree(v) == 4;
    if (all4) return ExceptionForm::K5;
  }
  if (g.vertex_count() == 3 && g.edge_count() > 0) {
    int pair_seen[3] = {0, 0, 0};  // pairs 01, 02, 12
    for (const Edge& e : g.edges()) {
      int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
      pair_seen[a + b - 1]++;
    }
    bool triangle = pair_seen[0] > 0 && pair_seen[1] > 0 && pair_seen[2] > 0;
    if (triangle && multiplicity(g) <= k - 1) return ExceptionForm::FatTriangle;
  }
  return ExceptionForm::None;
}

}  // namespace treepack
