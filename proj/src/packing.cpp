#include "treepack/packing.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

// Forest membership bookkeeping for the augmentation search. Adjacency is
// rebuilt on demand; graphs here are desk-scale.
class ForestFamily {
 public:
  ForestFamily(const MultiGraph& g, int k)
      : g_(g), forest_of_(g.edge_count(), -1), members_(k) {}

  int forest_of(int edge) const { return forest_of_[edge]; }
  const std::vector<int>& members(int forest) const { return members_[forest]; }
  int forests() const { return static_cast<int>(members_.size()); }

  void move_edge(int edge, int to) {
    int from = forest_of_[edge];
    if (from >= 0) {
      auto& m = members_[from];
      m.erase(std::find(m.begin(), m.end(), edge));
    }
    if (to >= 0) members_[to].push_back(edge);
    forest_of_[edge] = to;
  }

  // Path between u and v inside one forest as edge ids; empty when the
  // endpoints lie in different trees.
  std::vector<int> tree_path(int forest, int u, int v) const {
    std::vector<int> via_edge(g_.vertex_count(), -1);
    std::vector<int> prev(g_.vertex_count(), -1);
    std::vector<std::vector<std::pair<int, int>>> adj(g_.vertex_count());
    for (int id : members_[forest]) {
      const Edge& e = g_.edge(id);
      adj[e.u].push_back({e.v, id});
      adj[e.v].push_back({e.u, id});
    }
    std::deque<int> queue{u};
    std::vector<char> seen(g_.vertex_count(), 0);
    seen[u] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (x == v) break;
      for (auto [y, id] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        via_edge[y] = id;
        prev[y] = x;
        queue.push_back(y);
      }
    }
    if (!seen[v]) return {};
    std::vector<int> path;
    for (int x = v; x != u; x = prev[x]) path.push_back(via_edge[x]);
    return path;
  }

  bool connects_new(int forest, int edge) const {
    const Edge& e = g_.edge(edge);
    return tree_path(forest, e.u, e.v).empty() && e.u != e.v;
  }

 private:
  const MultiGraph& g_;
  std::vector<int> forest_of_;
  std::vector<std::vector<int>> members_;
};

// One augmentation attempt for a fresh edge: breadth-first exchange search
// over forest membership. Returns whether the edge was placed.
bool try_insert(ForestFamily& fam, const MultiGraph& g, int fresh) {
  const int k = fam.forests();
  std::vector<int> parent(g.edge_count(), -2);  // -2 unvisited, -1 root
  std::deque<int> queue{fresh};
  parent[fresh] = -1;

  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      if (fam.forest_of(cur) == i) continue;
      if (fam.connects_new(i, cur)) {
        // Apply the exchange chain: cur enters forest i, its parent enters
        // the forest cur vacates, and so on up to the fresh edge.
        int edge = cur, dest = i;
        while (edge != -1) {
          int src = fam.forest_of(edge);
          fam.move_edge(edge, dest);
          dest = src;
          edge = parent[edge];
        }
        return true;
      }
    }
    for (int i = 0; i < k; ++i) {
      if (fam.forest_of(cur) == i) continue;
      const Edge& e = g.edge(cur);
      for (int blocking : fam.tree_path(i, e.u, e.v)) {
        if (parent[blocking] != -2) continue;
        parent[blocking] = cur;
        queue.push_back(blocking);
      }
    }
  }
  return false;
}

PartitionCertificate component_certificate(const MultiGraph& g) {
  PartitionCertificate cert;
  for (const auto& comp : components(g)) cert.parts.push_back(comp.vertices);
  cert.crossing_count = 0;
  cert.bound = 0;
  return cert;
}

}  // namespace

PackResult pack_spanning_trees(const MultiGraph& g, int k,
                               int certificate_bound) {
  if (k < 1) throw input_error("pack_spanning_trees: k must be >= 1");
  const int n = g.vertex_count();
  if (n <= 1) {
    TreePacking p;
    p.trees.assign(k, {});
    return {p, std::nullopt};
  }
  if (!is_connected(g)) return {std::nullopt, component_certificate(g)};

  ForestFamily fam(g, k);
  for (int id = 0; id < g.edge_count(); ++id) try_insert(fam, g, id);

  bool full = true;
  for (int i = 0; i < k; ++i)
    full = full && static_cast<int>(fam.members(i).size()) == n - 1;
  if (full) {
    TreePacking p;
    for (int i = 0; i < k; ++i) {
      std::vector<int> tree = fam.members(i);
      std::sort(tree.begin(), tree.end());
      p.trees.push_back(std::move(tree));
    }
    if (auto v = verify_packing(g, p); !v)
      throw verification_error("pack_spanning_trees: " + v.reason);
    return {p, std::nullopt};
  }

  std::optional<PartitionCertificate> cert;
  if (n <= certificate_bound) {
    PartitionBound pb = partition_bound_oracle(g, certificate_bound);
    if (!pb.value || *pb.value >= k)
      throw verification_error(
          "pack_spanning_trees: infeasible but no certifying partition");
    PartitionCertificate c;
    c.parts = pb.parts;
    c.crossing_count = 0;
    std::vector<int> block(n, -1);
    for (int b = 0; b < static_cast<int>(c.parts.size()); ++b)
      for (int v : c.parts[b]) block[v] = b;
    for (const Edge& e : g.edges())
      if (block[e.u] != block[e.v]) ++c.crossing_count;
    c.bound = c.crossing_count / (static_cast<int>(c.parts.size()) - 1);
    cert = c;
  }
  return {std::nullopt, cert};
}

std::optional<int> spanning_tree_packing_number(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return std::nullopt;  // unbounded
  if (!is_connected(g)) return 0;
  int best = 0;
  const int cap = g.edge_count() / (n - 1);
  for (int k = 1; k <= cap; ++k) {
    if (!pack_spanning_trees(g, k, /*certificate_bound=*/0).feasible()) break;
    best = k;
  }
  return best;
}

PartitionBound partition_bound_oracle(const MultiGraph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw input_error("partition_bound_oracle: partition bound exceeded");
  if (n <= 1) return {std::nullopt, {}};

  // Restricted growth strings enumerate set partitions in lexicographic
  // order; the first partition attaining the minimum wins.
  std::vector<int> label(n, 0);
  std::optional<int> best;
  std::vector<int> best_label;

  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      int blocks = max_used + 1;
      if (blocks < 2) return;
      int crossing = 0;
      for (const Edge& e : g.edges())
        if (label[e.u] != label[e.v]) ++crossing;
      int value = crossing / (blocks - 1);
      if (!best || value < *best) {
        best = value;
        best_label = label;
      }
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      label[i] = b;
      rec(i + 1, std::max(max_used, b));
    }
  };
  label[0] = 0;
  rec(1, 0);

  PartitionBound out;
  out.value = best;
  if (best) {
    int blocks = *std::max_element(best_label.begin(), best_label.end()) + 1;
    out.parts.assign(blocks, {});
    for (int v = 0; v < n; ++v) out.parts[best_label[v]].push_back(v);
  }
  return out;
}

VerifyResult verify_packing(const MultiGraph& g, const TreePacking& p) {
  const int n = g.vertex_count();
  const int want = std::max(n - 1, 0);
  std::vector<char> used(g.edge_count(), 0);
  for (size_t t = 0; t < p.trees.size(); ++t) {
    const auto& tree = p.trees[t];
    if (static_cast<int>(tree.size()) != want)
      return {false, "tree " + std::to_string(t) + " has wrong size"};
    std::vector<int> dsu(n);
    std::iota(dsu.begin(), dsu.end(), 0);
    std::function<int(int)> find = [&](int v) {
      while (dsu[v] != v) v = dsu[v] = dsu[dsu[v]];
      return v;
    };
    for (int id : tree) {
      if (!g.has_edge_id(id))
        return {false, "tree " + std::to_string(t) + " has unknown edge id"};
      if (used[id])
        return {false, "edge " + std::to_string(id) + " used twice"};
      used[id] = 1;
      int a = find(g.edge(id).u), b = find(g.edge(id).v);
      if (a == b)
        return {false, "tree " + std::to_string(t) + " contains a cycle"};
      dsu[a] = b;
    }
    // n-1 acyclic edges on n vertices form a spanning tree.
  }
  return {true, ""};
}

}  // namespace treepack
