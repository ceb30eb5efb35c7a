#pragma once

#include "treepack/multigraph.hpp"

// Shared fixtures: the small named graphs the suites keep coming back to.
namespace fixtures {

using treepack::MultiGraph;
using treepack::build_graph;

inline MultiGraph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline MultiGraph doubled_edge() { return build_graph(2, {{0, 1}, {0, 1}}); }

// Every pair of the triangle twice; ids pair up (01,01,12,12,20,20).
inline MultiGraph doubled_triangle() {
  return build_graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}});
}

inline MultiGraph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return build_graph(n, e);
}

inline MultiGraph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return build_graph(n, e);
}

inline MultiGraph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return build_graph(n, e);
}

// K_{2,3} with vertices 0,1 on the small side.
inline MultiGraph k23() {
  return build_graph(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
}

inline MultiGraph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return build_graph(leaves + 1, e);
}

// Two K4 blocks {0..3} and {4..7} joined by three edges.
inline MultiGraph two_k4_bridged() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) e.push_back({u, v});
  for (int u = 4; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) e.push_back({u, v});
  e.push_back({0, 4});
  e.push_back({1, 5});
  e.push_back({2, 6});
  return build_graph(8, e);
}

// Two triangles sharing vertex 0.
inline MultiGraph bowtie() {
  return build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

}  // namespace fixtures
