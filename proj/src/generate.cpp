#include "treepack/generate.hpp"

#include "treepack/connectivity.hpp"
#include "treepack/errors.hpp"

namespace treepack {

std::uint64_t slot_seed(std::uint64_t master_seed, std::uint64_t index) {
  SplitMix64 mix{master_seed ^ (0x9E3779B97F4A7C15ull * (index + 1))};
  mix.next();
  return mix.next();
}

namespace {

void validate(const GenSpec& spec) {
  if (spec.n_min < 1 || spec.n_min > spec.n_max)
    throw input_error("generate: empty vertex range");
  if (spec.edges_min < 0 || spec.edges_min > spec.edges_max)
    throw input_error("generate: empty edge range");
  if (spec.mult_cap < 1) throw input_error("generate: mult_cap must be >= 1");
  if (spec.count < 0) throw input_error("generate: count must be >= 0");
}

}  // namespace

GenSlot generate_one(const GenSpec& spec, std::uint64_t index) {
  validate(spec);
  GenSlot slot;
  slot.seed = slot_seed(spec.master_seed, index);
  SplitMix64 rng{slot.seed};

  for (int attempt = 0; attempt < spec.attempt_budget; ++attempt) {
    int n = rng.range(spec.n_min, spec.n_max);
    int m = rng.range(spec.edges_min, spec.edges_max);
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m > pairs * spec.mult_cap) continue;

    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    std::vector<std::pair<int, int>> endpoints;
    bool stuck = false;
    for (int i = 0; i < m && !stuck; ++i) {
      int redraw = 0;
      while (true) {
        if (++redraw > 100) {
          stuck = true;
          break;
        }
        if (n < 2) {
          stuck = true;
          break;
        }
        int u = rng.range(0, n - 1);
        int v = rng.range(0, n - 2);
        if (v >= u) ++v;
        if (u > v) std::swap(u, v);
        if (mult[u][v] >= spec.mult_cap) continue;
        ++mult[u][v];
        endpoints.push_back({u, v});
        break;
      }
    }
    if (stuck) continue;

    MultiGraph g = build_graph(n, endpoints);
    if (spec.lambda_min >= 1) {
      if (!is_connected(g)) continue;
      if (n >= 2 && global_min_edge_cut(g).value < spec.lambda_min) continue;
      if (n < 2) continue;
    }
    slot.graph = std::move(g);
    return slot;
  }
  return slot;  // gave up
}

std::vector<GenSlot> generate(const GenSpec& spec) {
  validate(spec);
  std::vector<GenSlot> out;
  out.reserve(spec.count);
  for (long long i = 0; i < spec.count; ++i)
    out.push_back(generate_one(spec, static_cast<std::uint64_t>(i)));
  return out;
}

void enumerate_small(int n, int max_edges, int mult_cap,
                     const std::function<void(const MultiGraph&)>& visit) {
  if (n < 0 || n > 6) throw input_error("enumerate_small: n must be in [0, 6]");
  if (max_edges < 0) throw input_error("enumerate_small: max_edges negative");
  if (mult_cap < 0) throw input_error("enumerate_small: mult_cap negative");

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});

  // Multiplicity vector over pairs in lexicographic order; edges of one
  // graph are emitted pair-by-pair, so ids are canonical.
  std::vector<int> load(pairs.size(), 0);
  std::vector<std::pair<int, int>> endpoints;

  std::function<void(size_t, int)> rec = [&](size_t i, int budget) {
    if (i == pairs.size()) {
      visit(build_graph(n, endpoints));
      return;
    }
    for (int c = 0; c <= std::min(mult_cap, budget); ++c) {
      for (int j = 0; j < c; ++j) endpoints.push_back(pairs[i]);
      rec(i + 1, budget - c);
      for (int j = 0; j < c; ++j) endpoints.pop_back();
    }
  };
  rec(0, max_edges);
}

}  // namespace treepack
