#include "treepack/line_hamilton.hpp"

#include <algorithm>
#include <functional>

#include "treepack/connectivity.hpp"
#include "treepack/errors.hpp"

namespace treepack {

MultiGraph line_graph(const MultiGraph& g) {
  std::vector<Edge> edges;
  for (int a = 0; a < g.edge_count(); ++a) {
    const Edge& ea = g.edge(a);
    for (int b = a + 1; b < g.edge_count(); ++b) {
      const Edge& eb = g.edge(b);
      if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
        edges.push_back({a, b});
    }
  }
  return MultiGraph(g.edge_count(), std::move(edges));
}

bool line_graph_is_complete(const MultiGraph& g) {
  for (int a = 0; a < g.edge_count(); ++a) {
    const Edge& ea = g.edge(a);
    for (int b = a + 1; b < g.edge_count(); ++b) {
      const Edge& eb = g.edge(b);
      if (ea.u != eb.u && ea.u != eb.v && ea.v != eb.u && ea.v != eb.v)
        return false;
    }
  }
  return true;
}

CoreResult suppress_to_core(const MultiGraph& g, CorePolicy policy) {
  MultiGraph cur = g;
  std::vector<int> provenance(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) provenance[i] = i;

  auto remap = [&](const std::vector<int>& origin) {
    std::vector<int> next(origin.size());
    for (size_t i = 0; i < origin.size(); ++i) next[i] = provenance[origin[i]];
    provenance = std::move(next);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> leaves;
    for (int v = 0; v < cur.vertex_count(); ++v)
      if (cur.degree(v) == 1) leaves.push_back(v);
    if (!leaves.empty()) {
      auto del = delete_vertices(cur, leaves);
      remap(del.edge_origin);
      cur = std::move(del.graph);
      changed = true;
      continue;
    }
    for (int v = 0; v < cur.vertex_count(); ++v) {
      if (cur.degree(v) != 2) continue;
      const auto& inc = cur.incident(v);
      int pick = policy == CorePolicy::LowestEdge
                     ? std::min(inc[0], inc[1])
                     : std::max(inc[0], inc[1]);
      auto con = contract(cur, {pick});
      remap(con.edge_origin);
      cur = std::move(con.graph);
      changed = true;
      break;
    }
  }
  return {std::move(cur), std::move(provenance)};
}

CoreResult core(const MultiGraph& g, CorePolicy policy) {
  if (!is_connected(g)) throw input_error("core: graph must be connected");
  if (auto ess = r_essential_value(g, 1); ess && *ess < 3)
    throw input_error("core: graph must be essentially 3-edge-connected");
  if (line_graph_is_complete(g))
    throw input_error("core: line graph is complete, core undefined");
  CoreResult result = suppress_to_core(g, policy);
  if (result.core.vertex_count() >= 2 &&
      global_min_edge_cut(result.core).value < 3)
    throw verification_error("core: result is not 3-edge-connected");
  return result;
}

namespace {

// Incremental trail state: tracks distinct visited vertices, internal
// vertices and the edges they dominate, so class checks are O(1) after an
// O(degree) update per step.
class TrailState {
 public:
  explicit TrailState(const MultiGraph& g)
      : g_(g),
        used_(g.edge_count(), 0),
        visit_count_(g.vertex_count(), 0),
        internal_count_(g.vertex_count(), 0),
        dominated_count_(g.edge_count(), 0) {}

  void start(int vertex) {
    vertex_walk_.assign(1, vertex);
    bump_visit(vertex);
  }

  void reset() {
    while (!edge_walk_.empty()) pop_edge();
    if (!vertex_walk_.empty()) {
      drop_visit(vertex_walk_[0]);
      vertex_walk_.clear();
    }
  }

  void push_edge(int id) {
    int tail = vertex_walk_.back();
    int head = g_.other_end(id, tail);
    used_[id] = 1;
    // The previous tip becomes internal, except the start of the walk.
    if (!edge_walk_.empty()) mark_internal(tail);
    edge_walk_.push_back(id);
    vertex_walk_.push_back(head);
    bump_visit(head);
  }

  void pop_edge() {
    used_[edge_walk_.back()] = 0;
    edge_walk_.pop_back();
    drop_visit(vertex_walk_.back());
    vertex_walk_.pop_back();
    if (!edge_walk_.empty()) unmark_internal(vertex_walk_.back());
  }

  bool edge_used(int id) const { return used_[id] != 0; }
  int tip() const { return vertex_walk_.back(); }
  int length() const { return static_cast<int>(edge_walk_.size()); }
  bool spans_vertices() const { return distinct_visited_ == g_.vertex_count(); }
  bool dominating() const { return dominated_edges_ == g_.edge_count(); }
  bool spanning() const { return dominating() && spans_vertices(); }
  const std::vector<int>& edge_walk() const { return edge_walk_; }
  const std::vector<int>& vertex_walk() const { return vertex_walk_; }

 private:
  void bump_visit(int v) {
    if (visit_count_[v]++ == 0) ++distinct_visited_;
  }
  void drop_visit(int v) {
    if (--visit_count_[v] == 0) --distinct_visited_;
  }
  void mark_internal(int v) {
    if (internal_count_[v]++ == 0) {
      for (int e : g_.incident(v))
        if (dominated_count_[e]++ == 0) ++dominated_edges_;
    }
  }
  void unmark_internal(int v) {
    if (--internal_count_[v] == 0) {
      for (int e : g_.incident(v))
        if (--dominated_count_[e] == 0) --dominated_edges_;
    }
  }

  const MultiGraph& g_;
  std::vector<int> edge_walk_, vertex_walk_;
  std::vector<char> used_;
  std::vector<int> visit_count_, internal_count_, dominated_count_;
  int distinct_visited_ = 0;
  int dominated_edges_ = 0;
};

struct TrailSearchDriver {
  const MultiGraph& g;
  TrailMode mode;
  std::optional<std::pair<int, int>> ends;
  SearchLimits limits;
  long long nodes = 0;
  bool out_of_budget = false;
  TrailState state;

  TrailSearchDriver(const MultiGraph& g, TrailMode mode,
                    std::optional<std::pair<int, int>> ends,
                    SearchLimits limits)
      : g(g), mode(mode), ends(ends), limits(limits), state(g) {}

  bool tick() {
    if (++nodes > limits.node_budget ||
        (limits.cancel && limits.cancel->load(std::memory_order_relaxed))) {
      out_of_budget = true;
      return false;
    }
    return true;
  }

  bool goal() const {
    if (ends) {
      if (state.length() == 0 || state.edge_walk().back() != ends->second)
        return false;
    }
    return mode == TrailMode::Spanning ? state.spanning() : state.dominating();
  }

  // Depth-first extension; true once a goal trail is on the state.
  bool extend() {
    if (!tick()) return false;
    if (goal()) return true;
    // A prescribed final edge may only appear as the last step.
    if (ends && state.length() > 0 &&
        state.edge_walk().back() == ends->second)
      return false;
    int v = state.tip();
    for (int id : g.incident(v)) {
      if (state.edge_used(id)) continue;
      state.push_edge(id);
      if (extend()) return true;
      state.pop_edge();
      if (out_of_budget) return false;
    }
    return false;
  }
};

Trail snapshot(const TrailState& state) {
  Trail t;
  t.edge_walk = state.edge_walk();
  t.vertex_walk = state.vertex_walk();
  t.dominating = state.dominating();
  t.spanning = state.spanning();
  return t;
}

}  // namespace

TrailSearch find_trail(const MultiGraph& g, TrailMode mode,
                       std::optional<std::pair<int, int>> ends,
                       SearchLimits limits) {
  if (ends) {
    if (!g.has_edge_id(ends->first) || !g.has_edge_id(ends->second))
      throw input_error("find_trail: end edge id out of range");
    if (ends->first == ends->second)
      throw input_error("find_trail: end edges must differ");
  }

  TrailSearchDriver driver(g, mode, ends, limits);

  if (!ends) {
    // The empty trail at a vertex: spanning for one-vertex graphs,
    // dominating whenever the graph has no edges.
    for (int v = 0; v < g.vertex_count(); ++v) {
      driver.state.start(v);
      if (driver.goal()) return {SearchStatus::Found, snapshot(driver.state)};
      driver.state.reset();
    }
  }

  std::vector<int> starts;
  if (ends)
    starts.push_back(ends->first);
  else
    for (int id = 0; id < g.edge_count(); ++id) starts.push_back(id);

  for (int first : starts) {
    for (int side = 0; side < 2; ++side) {
      int tail = side == 0 ? g.edge(first).u : g.edge(first).v;
      driver.state.start(tail);
      driver.state.push_edge(first);
      if (driver.extend()) return {SearchStatus::Found, snapshot(driver.state)};
      driver.state.pop_edge();
      driver.state.reset();
      if (driver.out_of_budget) return {SearchStatus::Inconclusive, {}};
    }
  }
  return {SearchStatus::NotFound, {}};
}

TrailPairMatrix spanning_trail_pairs(const MultiGraph& g, SearchLimits limits) {
  const int m = g.edge_count();
  TrailPairMatrix out;
  out.edge_count = m;
  out.pair.assign(static_cast<size_t>(m) * m, 0);
  out.complete = true;

  TrailState state(g);
  long long nodes = 0;
  bool out_of_budget = false;

  std::function<void(int)> walk = [&](int first) {
    if (out_of_budget) return;
    if (++nodes > limits.node_budget ||
        (limits.cancel && limits.cancel->load(std::memory_order_relaxed))) {
      out_of_budget = true;
      return;
    }
    if (state.length() >= 2 && state.spanning()) {
      int last = state.edge_walk().back();
      out.pair[static_cast<size_t>(first) * m + last] = 1;
      out.pair[static_cast<size_t>(last) * m + first] = 1;
    }
    int v = state.tip();
    for (int id : g.incident(v)) {
      if (state.edge_used(id)) continue;
      state.push_edge(id);
      walk(first);
      state.pop_edge();
      if (out_of_budget) return;
    }
  };

  for (int first = 0; first < m && !out_of_budget; ++first) {
    for (int side = 0; side < 2 && !out_of_budget; ++side) {
      int tail = side == 0 ? g.edge(first).u : g.edge(first).v;
      state.start(tail);
      state.push_edge(first);
      walk(first);
      state.pop_edge();
      state.reset();
    }
  }
  out.complete = !out_of_budget;
  return out;
}

bool catlin_lai_predicate(const MultiGraph& g, int e1, int e2) {
  if (!g.has_edge_id(e1) || !g.has_edge_id(e2))
    throw input_error("catlin_lai_predicate: edge id out of range");
  if (e1 == e2) throw input_error("catlin_lai_predicate: edges must differ");
  if (!pack_spanning_trees(g, 2, /*certificate_bound=*/0).feasible())
    throw input_error(
        "catlin_lai_predicate: graph lacks two edge-disjoint spanning trees");
  auto del = delete_edges(g, {e1, e2});
  int nontrivial = 0;
  for (const auto& comp : components(del.graph))
    if (comp.edge_count >= 1) ++nontrivial;
  return nontrivial < 2;
}

Ternary is_hamilton_connected(const MultiGraph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > std::min(max_vertices, 22)) return Ternary::Unknown;
  if (n <= 1) return Ternary::True;
  if (!is_connected(g)) return Ternary::False;

  std::vector<unsigned> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const unsigned full = (1u << n) - 1;
  std::vector<unsigned> reach(1u << n);
  for (int s = 0; s < n; ++s) {
    std::fill(reach.begin(), reach.end(), 0u);
    reach[1u << s] = 1u << s;
    for (unsigned mask = 1; mask <= full; ++mask) {
      if (!(mask & (1u << s))) continue;
      unsigned ends = reach[mask];
      if (!ends) continue;
      for (int v = 0; v < n; ++v) {
        if (!(ends & (1u << v))) continue;
        unsigned next = adj[v] & ~mask;
        while (next) {
          unsigned wbit = next & (0u - next);
          reach[mask | wbit] |= wbit;
          next ^= wbit;
        }
      }
    }
    unsigned ham_ends = reach[full];
    for (int t = s + 1; t < n; ++t)
      if (!(ham_ends & (1u << t))) return Ternary::False;
  }
  return Ternary::True;
}

CorollaryReport corollary_pipeline(const MultiGraph& g, int line_bound,
                                   SearchLimits limits) {
  if (!is_connected(g))
    throw input_error("corollary_pipeline: graph must be connected");
  if (auto ess = r_essential_value(g, 1); ess && *ess < 3)
    throw input_error(
        "corollary_pipeline: graph must be essentially 3-edge-connected");

  CorollaryReport report;
  auto ess = r_essential_value(g, 1);
  auto two = r_essential_value(g, 2);
  report.hyp_essential5 = !ess || *ess >= 5;
  report.hyp_two_essential8 = !two || *two >= 8;
  report.hypotheses_met = report.hyp_essential5 && report.hyp_two_essential8;

  report.line_graph_complete = line_graph_is_complete(g);
  report.line_graph_vertices = g.edge_count();

  CoreResult cr = report.line_graph_complete ? suppress_to_core(g) : core(g);
  const MultiGraph& c = cr.core;
  report.core_vertices = c.vertex_count();
  report.core_edges = c.edge_count();
  report.core_lambda3 =
      c.vertex_count() <= 1 || global_min_edge_cut(c).value >= 3;
  auto cess = r_essential_value(c, 1);
  auto ctwo = r_essential_value(c, 2);
  report.core_essential5 = !cess || *cess >= 5;
  report.core_two_essential8 = !ctwo || *ctwo >= 8;

  auto tau = spanning_tree_packing_number(c);
  report.core_tau_ge2 = !tau || *tau >= 2;  // nullopt: fully collapsed core
  report.core_spanning_trail =
      find_trail(c, TrailMode::Spanning, std::nullopt, limits).status;
  report.chain_conclusion = report.core_tau_ge2 &&
                            report.core_spanning_trail == SearchStatus::Found;

  if (g.edge_count() <= line_bound) {
    Ternary direct = is_hamilton_connected(line_graph(g), line_bound);
    if (direct != Ternary::Unknown)
      report.line_hamilton_connected = direct == Ternary::True;
  }

  if (!report.hypotheses_met)
    report.verdict = "hypotheses not met";
  else if (report.chain_conclusion)
    report.verdict = "line graph certified hamilton-connected";
  else if (report.core_spanning_trail == SearchStatus::Inconclusive)
    report.verdict = "inconclusive (trail search budget exceeded)";
  else
    report.verdict = "chain incomplete";
  return report;
}

}  // namespace treepack
