#include "treepack/reduction.hpp"

#include <algorithm>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

std::vector<std::vector<int>> pair_multiplicities(const MultiGraph& g) {
  std::vector<std::vector<int>> mult(g.vertex_count(),
                                     std::vector<int>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  return mult;
}

// Visits size-`size` vertex subsets in lexicographic order.
template <typename Fn>
bool for_each_combination(int n, int size, Fn&& fn) {
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  if (size > n) return false;
  while (true) {
    if (fn(pick)) return true;
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

int induced_edge_count(const MultiGraph& g, const std::vector<int>& set) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : set) in[v] = 1;
  int count = 0;
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) ++count;
  return count;
}

}  // namespace

BoundSymbols make_bound_symbols(int m, int k) {
  BoundSymbols b;
  b.k = k;
  b.m = m;
  b.h = f_threshold(m, k);  // rejects anything outside k+1 <= m <= 2k-1
  return b;
}

std::optional<std::vector<int>> find_contractible(const MultiGraph& g, int k) {
  if (k < 1) throw input_error("find_contractible: k must be >= 1");
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;

  auto mult = pair_multiplicities(g);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mult[u][v] >= k) return std::vector<int>{u, v};

  for (int size = 3; size <= n; ++size) {
    std::optional<std::vector<int>> hit;
    for_each_combination(n, size, [&](const std::vector<int>& set) {
      if (induced_edge_count(g, set) < k * (size - 1)) return false;
      auto ind = induced_subgraph(g, set);
      if (!pack_spanning_trees(ind.graph, k, /*certificate_bound=*/0)
               .feasible())
        return false;
      hit = set;
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

Ternary is_reduced(const MultiGraph& g, int k, int exhaustive_bound) {
  if (k < 1) throw input_error("is_reduced: k must be >= 1");
  const int n = g.vertex_count();
  // A pair with >= k parallel edges violates density at size 2.
  auto mult = pair_multiplicities(g);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mult[u][v] >= k) return Ternary::False;
  if (n > exhaustive_bound) return Ternary::Unknown;
  // Density over all subsets decides: a dense disconnected subset always
  // contains a dense connected one.
  for (int size = 3; size <= n; ++size) {
    bool violated = for_each_combination(n, size, [&](const std::vector<int>& set) {
      return induced_edge_count(g, set) >= k * (size - 1);
    });
    if (violated) return Ternary::False;
  }
  return Ternary::True;
}

ReduceResult reduce(const MultiGraph& g, int k) {
  MultiGraph cur = g;
  ReductionTrace trace;
  while (auto set = find_contractible(cur, k)) {
    auto ind = induced_subgraph(cur, *set);
    PackResult pk = pack_spanning_trees(ind.graph, k, /*certificate_bound=*/0);
    if (!pk.feasible())
      throw verification_error("reduce: contractible set failed to pack");
    TreePacking internal;
    for (const auto& tree : pk.packing->trees) {
      std::vector<int> mapped;
      for (int id : tree) mapped.push_back(ind.edge_origin[id]);
      std::sort(mapped.begin(), mapped.end());
      internal.trees.push_back(std::move(mapped));
    }
    ContractResult cr = contract(cur, ind.edge_origin);
    trace.steps.push_back(
        {*set, std::move(internal), cr.vertex_map, cr.edge_origin});
    cur = std::move(cr.graph);
  }
  return {std::move(cur), std::move(trace)};
}

TreePacking lift_packing(const MultiGraph& g, const ReductionTrace& trace,
                         const TreePacking& reduced_packing) {
  // Replay the trace to recover every intermediate graph and confirm the
  // recorded maps match.
  std::vector<MultiGraph> stages{g};
  for (const auto& step : trace.steps) {
    auto ind = induced_subgraph(stages.back(), step.contracted_vertices);
    ContractResult cr = contract(stages.back(), ind.edge_origin);
    if (cr.vertex_map != step.vertex_map || cr.edge_origin != step.edge_origin)
      throw verification_error("lift_packing: trace does not replay");
    if (auto v = verify_packing(ind.graph, [&] {
          TreePacking local;
          std::vector<int> back(stages.back().edge_count(), -1);
          for (int i = 0; i < static_cast<int>(ind.edge_origin.size()); ++i)
            back[ind.edge_origin[i]] = i;
          for (const auto& tree : step.internal_packing.trees) {
            std::vector<int> t;
            for (int id : tree) {
              if (id < 0 || id >= static_cast<int>(back.size()) || back[id] < 0)
                throw verification_error(
                    "lift_packing: internal packing uses an edge outside the "
                    "contracted subgraph");
              t.push_back(back[id]);
            }
            std::sort(t.begin(), t.end());
            local.trees.push_back(std::move(t));
          }
          return local;
        }());
        !v)
      throw verification_error("lift_packing: internal packing invalid: " +
                               v.reason);
    stages.push_back(std::move(cr.graph));
  }

  if (auto v = verify_packing(stages.back(), reduced_packing); !v)
    throw verification_error("lift_packing: reduced packing invalid: " +
                             v.reason);

  TreePacking current = reduced_packing;
  for (int i = static_cast<int>(trace.steps.size()) - 1; i >= 0; --i) {
    const ReductionStep& step = trace.steps[i];
    if (current.trees.size() != step.internal_packing.trees.size())
      throw verification_error("lift_packing: tree count mismatch");
    TreePacking lifted;
    for (size_t t = 0; t < current.trees.size(); ++t) {
      std::vector<int> tree;
      for (int id : current.trees[t]) tree.push_back(step.edge_origin[id]);
      tree.insert(tree.end(), step.internal_packing.trees[t].begin(),
                  step.internal_packing.trees[t].end());
      std::sort(tree.begin(), tree.end());
      lifted.trees.push_back(std::move(tree));
    }
    if (auto v = verify_packing(stages[i], lifted); !v)
      throw verification_error("lift_packing: lifted packing invalid at step " +
                               std::to_string(i) + ": " + v.reason);
    current = std::move(lifted);
  }
  return current;
}

int degree_surplus(const MultiGraph& g, int k) {
  return 2 * g.edge_count() - 2 * k * g.vertex_count();
}

}  // namespace treepack
