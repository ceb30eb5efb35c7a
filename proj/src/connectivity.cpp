#include "treepack/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <set>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

// Dinic max-flow on a small directed network. Arcs are stored in pairs;
// arc i and arc i^1 are each other's reverse.
struct FlowNet {
  struct Arc {
    int to = 0;
    int cap = 0;
  };
  int n;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;
  std::vector<int> level, ptr;

  explicit FlowNet(int n) : n(n), out(n) {}

  void add_arc(int u, int v, int cap, int rev_cap) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, rev_cap});
  }

  bool bfs(int s, int t) {
    level.assign(n, -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id : out[v]) {
        if (arcs[id].cap > 0 && level[arcs[id].to] == -1) {
          level[arcs[id].to] = level[v] + 1;
          q.push(arcs[id].to);
        }
      }
    }
    return level[t] != -1;
  }

  int dfs(int v, int t, int pushed) {
    if (v == t) return pushed;
    for (int& i = ptr[v]; i < static_cast<int>(out[v].size()); ++i) {
      int id = out[v][i];
      const Arc& a = arcs[id];
      if (a.cap <= 0 || level[a.to] != level[v] + 1) continue;
      int got = dfs(a.to, t, std::min(pushed, a.cap));
      if (got > 0) {
        arcs[id].cap -= got;
        arcs[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      ptr.assign(n, 0);
      while (int got = dfs(s, t, std::numeric_limits<int>::max())) flow += got;
    }
    return flow;
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : out[v]) {
        if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
          seen[arcs[id].to] = 1;
          stack.push_back(arcs[id].to);
        }
      }
    }
    return seen;
  }
};

std::vector<int> side_from_indicator(const std::vector<char>& in_a, bool want) {
  std::vector<int> side;
  for (int v = 0; v < static_cast<int>(in_a.size()); ++v)
    if (static_cast<bool>(in_a[v]) == want) side.push_back(v);
  return side;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Prefers smaller value, then lexicographically smaller side_a.
bool cut_better(const Cut& challenger, const Cut& incumbent) {
  if (challenger.value != incumbent.value)
    return challenger.value < incumbent.value;
  return lex_less(challenger.side_a, incumbent.side_a);
}

}  // namespace

Cut make_cut(const MultiGraph& g, const std::vector<char>& in_a) {
  std::vector<char> normalized = in_a;
  if (!normalized.empty() && !normalized[0])
    for (auto& b : normalized) b = !b;
  Cut c;
  c.side_a = side_from_indicator(normalized, true);
  c.side_b = side_from_indicator(normalized, false);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (normalized[e.u] != normalized[e.v]) c.crossing.push_back(id);
  }
  c.value = static_cast<int>(c.crossing.size());
  return c;
}

bool cut_valid(const MultiGraph& g, const Cut& c) {
  if (c.side_a.empty() || c.side_b.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0), in_a(g.vertex_count(), 0);
  for (int v : c.side_a) {
    if (!g.has_vertex(v) || seen[v]) return false;
    seen[v] = 1;
    in_a[v] = 1;
  }
  for (int v : c.side_b) {
    if (!g.has_vertex(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (char s : seen)
    if (!s) return false;
  std::vector<int> crossing;
  for (int id = 0; id < g.edge_count(); ++id)
    if (in_a[g.edge(id).u] != in_a[g.edge(id).v]) crossing.push_back(id);
  return crossing == c.crossing &&
         c.value == static_cast<int>(c.crossing.size());
}

Cut global_min_edge_cut(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw input_error("global_min_edge_cut: need at least 2 vertices");
  auto comps = components(g);
  if (comps.size() > 1) {
    std::vector<char> in_a(n, 0);
    for (int v : comps[0].vertices) in_a[v] = 1;
    return make_cut(g, in_a);  // value 0
  }

  // Stoer-Wagner over supervertices; weights accumulate multiplicities.
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (const Edge& e : g.edges()) {
    ++w[e.u][e.v];
    ++w[e.v][e.u];
  }
  std::vector<std::vector<int>> merged(n);
  for (int v = 0; v < n; ++v) merged[v] = {v};
  std::vector<char> active(n, 1);
  long long best_value = -1;
  std::vector<char> best_in_a;

  for (int phase = n; phase > 1; --phase) {
    std::vector<long long> weight_to(n, 0);
    std::vector<char> added(n, 0);
    int prev = -1, last = -1;
    for (int step = 0; step < phase; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (!active[v] || added[v]) continue;
        if (pick == -1 || weight_to[v] > weight_to[pick]) pick = v;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      for (int v = 0; v < n; ++v)
        if (active[v] && !added[v]) weight_to[v] += w[pick][v];
    }
    // Cut of the phase: the last-added supervertex against the rest.
    if (best_value < 0 || weight_to[last] < best_value ||
        (weight_to[last] == best_value && [&] {
          std::vector<char> in_a(n, 0);
          for (int v : merged[last]) in_a[v] = 1;
          if (!in_a[0])
            for (auto& b : in_a) b = !b;
          return lex_less(side_from_indicator(in_a, true),
                          side_from_indicator(best_in_a, true));
        }())) {
      best_value = weight_to[last];
      best_in_a.assign(n, 0);
      for (int v : merged[last]) best_in_a[v] = 1;
      if (!best_in_a[0])
        for (auto& b : best_in_a) b = !b;
    }
    // Merge last into prev.
    for (int v = 0; v < n; ++v) {
      if (!active[v] || v == prev || v == last) continue;
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    active[last] = 0;
    merged[prev].insert(merged[prev].end(), merged[last].begin(),
                        merged[last].end());
  }
  Cut c = make_cut(g, best_in_a);
  if (c.value != best_value)
    throw verification_error("global_min_edge_cut: weight/crossing mismatch");
  return c;
}

Cut st_min_edge_cut(const MultiGraph& g, int s, int t) {
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw input_error("st_min_edge_cut: vertex out of range");
  if (s == t) throw input_error("st_min_edge_cut: s and t must differ");
  FlowNet net(g.vertex_count());
  for (const Edge& e : g.edges()) net.add_arc(e.u, e.v, 1, 1);
  int flow = net.max_flow(s, t);
  Cut c = make_cut(g, net.residual_reachable(s));
  // Normalize: side_a is the s-side.
  if (std::find(c.side_a.begin(), c.side_a.end(), s) == c.side_a.end())
    std::swap(c.side_a, c.side_b);
  if (c.value != flow)
    throw verification_error("st_min_edge_cut: flow/cut mismatch");
  return c;
}

namespace {

// All connected edge sets of size exactly r, each sorted ascending.
// Canonical growth: a set is generated from its smallest edge using only
// larger edges, with duplicates filtered per start.
std::vector<std::vector<int>> connected_edge_sets(const MultiGraph& g, int r) {
  std::vector<std::vector<int>> result;
  if (r == 0) return result;
  std::set<std::vector<int>> seen;
  std::vector<int> current;

  auto touches = [&](int id) {
    const Edge& e = g.edge(id);
    for (int f : current) {
      const Edge& o = g.edge(f);
      if (e.u == o.u || e.u == o.v || e.v == o.u || e.v == o.v) return true;
    }
    return false;
  };

  std::function<void(int)> grow = [&](int min_id) {
    if (static_cast<int>(current.size()) == r) {
      std::vector<int> key = current;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) result.push_back(std::move(key));
      return;
    }
    for (int id = min_id + 1; id < g.edge_count(); ++id) {
      if (std::find(current.begin(), current.end(), id) != current.end())
        continue;
      if (!touches(id)) continue;
      current.push_back(id);
      grow(min_id);
      current.pop_back();
    }
  };

  for (int first = 0; first < g.edge_count(); ++first) {
    current = {first};
    grow(first);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> vertex_support(const MultiGraph& g,
                                const std::vector<int>& edge_set) {
  std::set<int> vs;
  for (int id : edge_set) {
    vs.insert(g.edge(id).u);
    vs.insert(g.edge(id).v);
  }
  return {vs.begin(), vs.end()};
}

}  // namespace

std::optional<REssentialCut> r_essential_edge_connectivity(const MultiGraph& g,
                                                           int r) {
  if (r < 1) throw input_error("r_essential_edge_connectivity: r must be >= 1");
  auto seeds = connected_edge_sets(g, r);
  // Distinct vertex supports are enough: the cut depends only on which
  // vertices get merged.
  std::vector<std::vector<int>> supports;
  {
    std::set<std::vector<int>> seen;
    for (const auto& s : seeds) {
      auto vs = vertex_support(g, s);
      if (seen.insert(vs).second) supports.push_back(vs);
    }
  }
  // Pair each support with a witness edge set (first seed with that
  // support, in enumeration order).
  std::vector<std::vector<int>> support_edges(supports.size());
  for (size_t i = 0; i < supports.size(); ++i) {
    for (const auto& s : seeds) {
      if (vertex_support(g, s) == supports[i]) {
        support_edges[i] = s;
        break;
      }
    }
  }

  std::optional<Cut> best;
  for (size_t i = 0; i < supports.size(); ++i) {
    for (size_t j = i + 1; j < supports.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(supports[i].begin(), supports[i].end(),
                            supports[j].begin(), supports[j].end(),
                            std::back_inserter(inter));
      if (!inter.empty()) continue;
      std::vector<int> contract_set = support_edges[i];
      contract_set.insert(contract_set.end(), support_edges[j].begin(),
                          support_edges[j].end());
      ContractResult cr = contract(g, contract_set);
      int s = cr.vertex_map[supports[i][0]];
      int t = cr.vertex_map[supports[j][0]];
      Cut small = st_min_edge_cut(cr.graph, s, t);
      // Map the contracted cut back to the original graph.
      std::vector<char> small_in_a(cr.graph.vertex_count(), 0);
      for (int v : small.side_a) small_in_a[v] = 1;
      std::vector<char> in_a(g.vertex_count(), 0);
      for (int v = 0; v < g.vertex_count(); ++v)
        in_a[v] = small_in_a[cr.vertex_map[v]];
      Cut candidate = make_cut(g, in_a);
      if (!best || cut_better(candidate, *best)) best = candidate;
    }
  }
  if (!best) return std::nullopt;
  return REssentialCut{best->value, *best};
}

std::optional<REssentialCut> r_essential_brute_oracle(const MultiGraph& g,
                                                      int r,
                                                      int max_vertices) {
  if (r < 1) throw input_error("r_essential_brute_oracle: r must be >= 1");
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw input_error("r_essential_brute_oracle: oracle bound exceeded");
  if (n < 2) return std::nullopt;

  std::optional<Cut> best;
  const std::uint64_t masks = 1ull << (n - 1);
  std::vector<char> in_a(n, 0);
  for (std::uint64_t mask = 0; mask + 1 < masks; ++mask) {
    // Vertex 0 always on side A; mask covers vertices 1..n-1. The all-on
    // mask would leave side B empty.
    in_a[0] = 1;
    for (int v = 1; v < n; ++v) in_a[v] = (mask >> (v - 1)) & 1u;
    // Components of G minus the crossing edges lie wholly in one side.
    std::vector<int> comp(n, -1);
    int best_a = 0, best_b = 0, cut_value = 0;
    for (int start = 0; start < n; ++start) {
      if (comp[start] != -1) continue;
      comp[start] = start;
      std::vector<int> stack{start};
      int comp_edges = 0;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int id : g.incident(v)) {
          int w = g.other_end(id, v);
          if (in_a[v] != in_a[w]) continue;
          if (g.edge(id).u == v) ++comp_edges;  // count each edge once
          if (comp[w] == -1) {
            comp[w] = start;
            stack.push_back(w);
          }
        }
      }
      int& best_side = in_a[start] ? best_a : best_b;
      best_side = std::max(best_side, comp_edges);
    }
    if (best_a < r || best_b < r) continue;
    for (const Edge& e : g.edges())
      if (in_a[e.u] != in_a[e.v]) ++cut_value;
    if (!best || cut_value < best->value ||
        (cut_value == best->value &&
         lex_less(side_from_indicator(in_a, true), best->side_a))) {
      best = make_cut(g, in_a);
    }
  }
  if (!best) return std::nullopt;
  return REssentialCut{best->value, *best};
}

namespace {

// 0/1 adjacency over distinct neighbors; parallel edges collapse.
std::vector<std::vector<char>> simple_adjacency(const MultiGraph& g) {
  std::vector<std::vector<char>> adj(g.vertex_count(),
                                     std::vector<char>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    adj[e.u][e.v] = 1;
    adj[e.v][e.u] = 1;
  }
  return adj;
}

}  // namespace

int vertex_connectivity(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return 0;
  if (!is_connected(g)) return 0;
  auto adj = simple_adjacency(g);
  bool complete = true;
  for (int u = 0; u < n && complete; ++u)
    for (int v = u + 1; v < n && complete; ++v)
      if (!adj[u][v]) complete = false;
  if (complete) return n - 1;

  const int big = n;  // enough to act as infinity for vertex capacities
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (adj[s][t]) continue;
      // Split vertices: v_in = 2v, v_out = 2v+1.
      FlowNet net(2 * n);
      for (int v = 0; v < n; ++v)
        net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1, 0);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (adj[u][v]) {
            net.add_arc(2 * u + 1, 2 * v, big, 0);
            net.add_arc(2 * v + 1, 2 * u, big, 0);
          }
      best = std::min(best, net.max_flow(2 * s + 1, 2 * t));
    }
  }
  return best;
}

std::optional<int> essential_vertex_connectivity(const MultiGraph& g,
                                                 int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw input_error("essential_vertex_connectivity: subset bound exceeded");
  for (int size = 0; size <= n; ++size) {
    // Combinations in lexicographic order.
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      auto del = delete_vertices(g, pick);
      int nontrivial = 0;
      for (const auto& comp : components(del.graph))
        if (comp.edge_count >= 1) ++nontrivial;
      if (nontrivial >= 2) return size;
      // next combination
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<int> r_essential_value(const MultiGraph& g, int r) {
  std::optional<REssentialCut> res;
  if (g.vertex_count() <= 10)
    res = r_essential_brute_oracle(g, r);
  else
    res = r_essential_edge_connectivity(g, r);
  if (!res) return std::nullopt;
  return res->value;
}

ConnectivityProfile connectivity_profile(const MultiGraph& g) {
  ConnectivityProfile p;
  if (g.vertex_count() >= 2 && is_connected(g))
    p.lambda = global_min_edge_cut(g).value;
  else
    p.lambda = 0;
  p.essential_lambda = r_essential_value(g, 1);
  p.two_essential_lambda = r_essential_value(g, 2);
  p.kappa = vertex_connectivity(g);
  p.essential_kappa = essential_vertex_connectivity(g);
  return p;
}

HypothesisCheck is_hypothesis(const MultiGraph& g, int m, int h_ess,
                              int h_2ess) {
  HypothesisCheck h;
  int lambda = (g.vertex_count() >= 2 && is_connected(g))
                   ? global_min_edge_cut(g).value
                   : 0;
  h.lambda_ok = lambda >= m;
  auto ess = r_essential_value(g, 1);
  auto two = r_essential_value(g, 2);
  h.essential_ok = !ess || *ess >= h_ess;
  h.two_essential_ok = !two || *two >= h_2ess;
  return h;
}

}  // namespace treepack
