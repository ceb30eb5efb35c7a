#include "doctest.h"
#include "test_graphs.hpp"
#include "treepack/errors.hpp"
#include "treepack/generate.hpp"
#include "treepack/reduction.hpp"

using namespace treepack;
using namespace fixtures;

TEST_CASE("find_contractible") {
  SUBCASE("doubled triangle, k=2: a parallel pair") {
    auto s = find_contractible(doubled_triangle(), 2);
    REQUIRE(s.has_value());
    CHECK(s->size() == 2);
  }
  SUBCASE("C6, k=2: nothing to contract") {
    CHECK(!find_contractible(cycle(6), 2).has_value());
  }
  SUBCASE("two bridged K4s, k=2: one K4 block") {
    auto s = find_contractible(two_k4_bridged(), 2);
    REQUIRE(s.has_value());
    CHECK(*s == std::vector<int>{0, 1, 2, 3});
  }
}

TEST_CASE("is_reduced") {
  CHECK(is_reduced(cycle(6), 2) == Ternary::True);
  CHECK(is_reduced(complete(4), 2) == Ternary::False);
  CHECK(is_reduced(complete(5), 3) == Ternary::True);
  CHECK(is_reduced(doubled_triangle(), 2) == Ternary::False);
  // Beyond the exhaustive bound only the multiplicity shortcut decides.
  CHECK(is_reduced(cycle(6), 2, 4) == Ternary::Unknown);
  CHECK(is_reduced(doubled_edge(), 2, 1) == Ternary::False);
}

TEST_CASE("reduce") {
  SUBCASE("two bridged K4s collapse to one vertex in three steps") {
    auto r = reduce(two_k4_bridged(), 2);
    CHECK(r.graph.vertex_count() == 1);
    CHECK(r.graph.edge_count() == 0);
    CHECK(r.trace.steps.size() == 3);
  }
  SUBCASE("C6 is already reduced") {
    auto r = reduce(cycle(6), 2);
    CHECK(r.graph.vertex_count() == 6);
    CHECK(r.trace.steps.empty());
  }
  SUBCASE("doubled triangle collapses for k=2") {
    auto r = reduce(doubled_triangle(), 2);
    CHECK(r.graph.vertex_count() == 1);
  }
  SUBCASE("reduce is a fixpoint") {
    for (const MultiGraph& g :
         {two_k4_bridged(), cycle(6), doubled_triangle(), complete(5)}) {
      for (int k = 2; k <= 3; ++k) {
        auto once = reduce(g, k);
        auto twice = reduce(once.graph, k);
        CHECK(twice.trace.steps.empty());
        CHECK(twice.graph.vertex_count() == once.graph.vertex_count());
        CHECK(is_reduced(once.graph, k) == Ternary::True);
      }
    }
  }
}

TEST_CASE("lift_packing") {
  SUBCASE("two bridged K4s: lift two trees from the collapsed graph") {
    MultiGraph g = two_k4_bridged();
    auto r = reduce(g, 2);
    REQUIRE(r.graph.vertex_count() == 1);
    TreePacking trivial;
    trivial.trees = {{}, {}};
    TreePacking lifted = lift_packing(g, r.trace, trivial);
    CHECK(verify_packing(g, lifted).ok);
    CHECK(lifted.trees.size() == 2);
    CHECK(lifted.trees[0].size() == 7);
  }
  SUBCASE("empty trace returns the packing unchanged") {
    MultiGraph g = cycle(6);
    auto r = reduce(g, 2);
    TreePacking one;
    one.trees = {{0, 1, 2, 3, 4}};
    TreePacking lifted = lift_packing(g, r.trace, one);
    CHECK(lifted.trees == one.trees);
  }
  SUBCASE("doubled triangle lifts to two spanning trees") {
    MultiGraph g = doubled_triangle();
    auto r = reduce(g, 2);
    TreePacking trivial;
    trivial.trees = {{}, {}};
    TreePacking lifted = lift_packing(g, r.trace, trivial);
    CHECK(verify_packing(g, lifted).ok);
    CHECK(lifted.trees[0].size() == 2);
  }
  SUBCASE("an unverifiable reduced packing is rejected by name") {
    MultiGraph g = two_k4_bridged();
    auto r = reduce(g, 2);
    TreePacking wrong;
    wrong.trees = {{0}, {}};  // nonexistent edge in the 1-vertex graph
    CHECK_THROWS_AS(lift_packing(g, r.trace, wrong), verification_error);
  }
}

TEST_CASE("degree_surplus") {
  CHECK(degree_surplus(complete(4), 2) == -4);
  CHECK(degree_surplus(complete(5), 3) == -10);
  CHECK(degree_surplus(doubled_triangle(), 2) == 0);
  // Matches the summed form.
  MultiGraph g = two_k4_bridged();
  int direct = 0;
  for (int v = 0; v < g.vertex_count(); ++v) direct += g.degree(v) - 2 * 2;
  CHECK(degree_surplus(g, 2) == direct);
}

TEST_CASE("sparse graphs satisfy the surplus inequality") {
  // Any graph with e <= k(n-1) - 1 has degree surplus <= -2k-2.
  GenSpec spec;
  spec.n_min = 2;
  spec.n_max = 9;
  spec.edges_min = 0;
  spec.edges_max = 20;
  spec.mult_cap = 3;
  spec.lambda_min = 0;
  spec.master_seed = 4242;
  spec.count = 200;
  for (const auto& slot : generate(spec)) {
    REQUIRE(slot.graph.has_value());
    const MultiGraph& g = *slot.graph;
    for (int k = 2; k <= 3; ++k) {
      if (g.edge_count() <= k * (g.vertex_count() - 1) - 1)
        CHECK(degree_surplus(g, k) <= -2 * k - 2);
    }
  }
}

TEST_CASE("reduction preserves packability on random graphs") {
  GenSpec spec;
  spec.n_min = 2;
  spec.n_max = 7;
  spec.edges_min = 1;
  spec.edges_max = 16;
  spec.mult_cap = 3;
  spec.lambda_min = 0;
  spec.master_seed = 808;
  spec.count = 60;
  for (const auto& slot : generate(spec)) {
    REQUIRE(slot.graph.has_value());
    const MultiGraph& g = *slot.graph;
    for (int k = 2; k <= 3; ++k) {
      bool before = pack_spanning_trees(g, k, 0).feasible();
      auto red = reduce(g, k);
      auto reduced_pack = pack_spanning_trees(red.graph, k, 0);
      CHECK(before == reduced_pack.feasible());
      if (reduced_pack.feasible()) {
        TreePacking lifted = lift_packing(g, red.trace, *reduced_pack.packing);
        CHECK(verify_packing(g, lifted).ok);
      }
    }
  }
}
