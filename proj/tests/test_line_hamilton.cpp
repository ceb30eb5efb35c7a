#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "test_graphs.hpp"
#include "treepack/connectivity.hpp"
#include "treepack/errors.hpp"
#include "treepack/generate.hpp"
#include "treepack/line_hamilton.hpp"

using namespace treepack;
using namespace fixtures;

namespace {

// Multigraph isomorphism by permutation search; fine up to n ~ 8.
bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  int n = a.vertex_count();
  auto key = [n](const MultiGraph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : g.edges()) {
      int u = perm[e.u], v = perm[e.v];
      pairs.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
  };
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  auto want = key(b, identity);
  std::vector<int> perm = identity;
  do {
    if (key(a, perm) == want) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool walk_is_valid_trail(const MultiGraph& g, const Trail& t) {
  if (t.vertex_walk.size() != t.edge_walk.size() + 1) return false;
  std::vector<char> used(g.edge_count(), 0);
  for (size_t i = 0; i < t.edge_walk.size(); ++i) {
    int id = t.edge_walk[i];
    if (used[id]) return false;
    used[id] = 1;
    const Edge& e = g.edge(id);
    int from = t.vertex_walk[i], to = t.vertex_walk[i + 1];
    if (!((e.u == from && e.v == to) || (e.v == from && e.u == to)))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("line_graph on the named graphs") {
  auto lp3 = line_graph(path(3));
  CHECK(lp3.vertex_count() == 2);
  CHECK(lp3.edge_count() == 1);

  auto lstar = line_graph(star(3));
  CHECK(lstar.vertex_count() == 3);
  CHECK(lstar.edge_count() == 3);  // triangle

  auto lc4 = line_graph(cycle(4));
  CHECK(isomorphic(lc4, cycle(4)));

  CHECK(multiplicity(line_graph(doubled_edge())) == 1);  // simple output
}

TEST_CASE("line_graph_is_complete") {
  CHECK(line_graph_is_complete(star(4)));
  CHECK(line_graph_is_complete(triangle()));
  CHECK(line_graph_is_complete(doubled_triangle()));
  CHECK(!line_graph_is_complete(path(4)));
  CHECK(!line_graph_is_complete(complete(4)));
}

TEST_CASE("core") {
  SUBCASE("pendant vertices are deleted") {
    // K4 with a pendant leaf on vertex 0; deletion alone reaches the
    // fixpoint because no degree-2 vertex remains.
    auto g = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                             {0, 4}});
    auto r = core(g);
    CHECK(r.core.vertex_count() == 4);
    CHECK(r.core.edge_count() == 6);
    CHECK(r.provenance == std::vector<int>{0, 1, 2, 3, 4, 5});
  }
  SUBCASE("a triangle with a pendant fails the essential-3 precondition") {
    // Cutting the two far triangle edges leaves two components that both
    // keep an edge, an essential 2-cut.
    auto g = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CHECK_THROWS_AS(core(g), input_error);
    // The unchecked fixpoint keeps collapsing the leftover triangle.
    CHECK(suppress_to_core(g).core.vertex_count() == 1);
  }
  SUBCASE("K2,3 collapses to a triple edge") {
    auto r = core(k23());
    CHECK(r.core.vertex_count() == 2);
    CHECK(r.core.edge_count() == 3);
    CHECK(multiplicity(r.core) == 3);
    CHECK(global_min_edge_cut(r.core).value == 3);
  }
  SUBCASE("minimum degree 3 is a fixpoint") {
    auto r = core(complete(4));
    CHECK(r.core.vertex_count() == 4);
    CHECK(r.core.edge_count() == 6);
    std::vector<int> identity(6);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(r.provenance == identity);
  }
  SUBCASE("preconditions are named") {
    CHECK_THROWS_AS(core(build_graph(4, {{0, 1}, {2, 3}})), input_error);
    CHECK_THROWS_AS(core(cycle(4)), input_error);        // essential 2-cut
    CHECK_THROWS_AS(core(doubled_triangle()), input_error);  // complete L(G)
  }
  SUBCASE("tie-break policies give isomorphic cores") {
    for (const MultiGraph& g : {k23(), complete(4), cycle(5), bowtie()}) {
      if (!is_connected(g)) continue;
      auto lo = suppress_to_core(g, CorePolicy::LowestEdge);
      auto hi = suppress_to_core(g, CorePolicy::HighestEdge);
      CHECK(isomorphic(lo.core, hi.core));
    }
  }
}

TEST_CASE("find_trail") {
  SUBCASE("C6 spanning trail is the cycle itself") {
    auto r = find_trail(cycle(6), TrailMode::Spanning);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.trail->spanning);
    CHECK(r.trail->edge_walk.size() == 6);
    CHECK(walk_is_valid_trail(cycle(6), *r.trail));
  }
  SUBCASE("K1,3 has no spanning trail") {
    CHECK(find_trail(star(3), TrailMode::Spanning).status ==
          SearchStatus::NotFound);
  }
  SUBCASE("doubled triangle: trail between the parallel 01-edges") {
    auto r = find_trail(doubled_triangle(), TrailMode::Spanning,
                        std::pair<int, int>{0, 1});
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.trail->edge_walk.front() == 0);
    CHECK(r.trail->edge_walk.back() == 1);
    CHECK(r.trail->spanning);
    CHECK(walk_is_valid_trail(doubled_triangle(), *r.trail));
  }
  SUBCASE("a single-vertex graph carries the empty spanning trail") {
    auto r = find_trail(build_graph(1, {}), TrailMode::Spanning);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.trail->edge_walk.empty());
  }
  SUBCASE("a single edge spans K2's vertices but dominates nothing") {
    // Both ends of the one-edge walk are endpoints, so the edge has no
    // internal vertex: dominating fails and with it spanning.
    CHECK(find_trail(path(2), TrailMode::Spanning).status ==
          SearchStatus::NotFound);
    auto d2 = find_trail(doubled_edge(), TrailMode::Spanning);
    REQUIRE(d2.status == SearchStatus::Found);
    CHECK(d2.trail->edge_walk.size() == 2);
  }
  SUBCASE("budget exhaustion is inconclusive, not negative") {
    SearchLimits tiny;
    tiny.node_budget = 2;
    auto r = find_trail(complete(6), TrailMode::Spanning, std::nullopt, tiny);
    CHECK(r.status == SearchStatus::Inconclusive);
  }
  SUBCASE("end edges must differ") {
    CHECK_THROWS_AS(
        find_trail(triangle(), TrailMode::Spanning, std::pair<int, int>{1, 1}),
        input_error);
  }
  SUBCASE("dominating mode accepts a non-spanning dominating trail") {
    // Bowtie: walk 1-2-0-3-4 uses the two triangle paths; every edge
    // touches an internal vertex but vertex visits are what spanning
    // additionally needs.
    auto r = find_trail(bowtie(), TrailMode::Dominating);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.trail->dominating);
  }
}

TEST_CASE("catlin_lai_predicate") {
  SUBCASE("parallel 01-edges of the doubled triangle: not an essential cut") {
    CHECK(catlin_lai_predicate(doubled_triangle(), 0, 1));
  }
  SUBCASE("parallel bridge pair between two doubled triangles: essential") {
    // Vertices 0,1,2 and 3,4,5; doubled triangles on each; doubled bridge
    // 2-3 (ids 12, 13).
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}}) {
      e.push_back({u, v});
      e.push_back({u, v});
    }
    for (auto [u, v] : {std::pair{3, 4}, {4, 5}, {5, 3}}) {
      e.push_back({u, v});
      e.push_back({u, v});
    }
    e.push_back({2, 3});
    e.push_back({2, 3});
    auto g = build_graph(6, e);
    REQUIRE(pack_spanning_trees(g, 2, 0).feasible());
    CHECK(!catlin_lai_predicate(g, 12, 13));
    // The matching trail search must also fail.
    CHECK(find_trail(g, TrailMode::Spanning, std::pair<int, int>{12, 13})
              .status == SearchStatus::NotFound);
  }
  SUBCASE("precondition: two disjoint spanning trees required") {
    CHECK_THROWS_AS(catlin_lai_predicate(cycle(6), 0, 1), input_error);
  }
  SUBCASE("equal edges rejected") {
    CHECK_THROWS_AS(catlin_lai_predicate(doubled_triangle(), 2, 2),
                    input_error);
  }
}

TEST_CASE("predicate equals trail existence on random packable graphs") {
  GenSpec spec;
  spec.n_min = 3;
  spec.n_max = 6;
  spec.edges_min = 4;
  spec.edges_max = 11;
  spec.mult_cap = 2;
  spec.lambda_min = 2;
  spec.master_seed = 90210;
  spec.count = 60;
  int tested = 0;
  for (const auto& slot : generate(spec)) {
    REQUIRE(slot.graph.has_value());
    const MultiGraph& g = *slot.graph;
    if (!pack_spanning_trees(g, 2, 0).feasible()) continue;
    ++tested;
    auto matrix = spanning_trail_pairs(g);
    REQUIRE(matrix.complete);
    for (int a = 0; a < g.edge_count(); ++a) {
      for (int b = a + 1; b < g.edge_count(); ++b) {
        bool predicate = catlin_lai_predicate(g, a, b);
        CHECK(predicate == matrix.at(a, b));
        // Spot-check the per-pair search against the batched matrix.
        if ((a + b) % 7 == 0) {
          auto direct =
              find_trail(g, TrailMode::Spanning, std::pair<int, int>{a, b});
          CHECK((direct.status == SearchStatus::Found) == matrix.at(a, b));
          if (direct.trail) CHECK(walk_is_valid_trail(g, *direct.trail));
        }
      }
    }
  }
  CHECK(tested > 10);
}

TEST_CASE("is_hamilton_connected") {
  CHECK(is_hamilton_connected(complete(4)) == Ternary::True);
  CHECK(is_hamilton_connected(cycle(4)) == Ternary::False);
  CHECK(is_hamilton_connected(path(3)) == Ternary::False);
  CHECK(is_hamilton_connected(complete(6)) == Ternary::True);
  CHECK(is_hamilton_connected(build_graph(1, {})) == Ternary::True);
  CHECK(is_hamilton_connected(complete(11)) == Ternary::Unknown);
  CHECK(is_hamilton_connected(complete(11), 12) == Ternary::True);
}

TEST_CASE("corollary_pipeline") {
  SUBCASE("K2,3 runs but misses the hypotheses") {
    auto r = corollary_pipeline(k23());
    CHECK(!r.hyp_essential5);  // essential lambda is 3
    CHECK(!r.hypotheses_met);
    CHECK(r.verdict == "hypotheses not met");
    CHECK(r.core_vertices == 2);
  }
  SUBCASE("doubled triangle: complete line graph handled in place") {
    auto r = corollary_pipeline(doubled_triangle());
    CHECK(r.hypotheses_met);  // both classes vacuous
    CHECK(r.line_graph_complete);
    CHECK(r.core_vertices == 3);
    CHECK(r.core_edges == 6);
    CHECK(r.core_tau_ge2);
    CHECK(r.core_spanning_trail == SearchStatus::Found);
    CHECK(r.chain_conclusion);
    REQUIRE(r.line_hamilton_connected.has_value());
    CHECK(*r.line_hamilton_connected);  // L = K6
    CHECK(r.verdict == "line graph certified hamilton-connected");
  }
  SUBCASE("preconditions are enforced") {
    CHECK_THROWS_AS(corollary_pipeline(build_graph(4, {{0, 1}, {2, 3}})),
                    input_error);
    CHECK_THROWS_AS(corollary_pipeline(cycle(4)), input_error);
  }
}

TEST_CASE("core keeps edge connectivity >= 3 on filtered random graphs") {
  GenSpec spec;
  spec.n_min = 4;
  spec.n_max = 8;
  spec.edges_min = 6;
  spec.edges_max = 18;
  spec.mult_cap = 2;
  spec.lambda_min = 1;
  spec.master_seed = 777;
  spec.count = 300;
  int accepted = 0;
  for (const auto& slot : generate(spec)) {
    if (accepted >= 40) break;
    REQUIRE(slot.graph.has_value());
    const MultiGraph& g = *slot.graph;
    auto ess = r_essential_value(g, 1);
    if (ess && *ess < 3) continue;
    if (line_graph_is_complete(g)) continue;
    ++accepted;
    auto r = core(g);
    if (r.core.vertex_count() >= 2)
      CHECK(global_min_edge_cut(r.core).value >= 3);
    // Provenance maps into the original id space.
    for (int id : r.provenance) CHECK(g.has_edge_id(id));
  }
  CHECK(accepted >= 20);
}
