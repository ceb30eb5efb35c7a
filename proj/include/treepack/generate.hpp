#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "treepack/multigraph.hpp"

namespace treepack {

// SplitMix64: portable, seedable, byte-identical everywhere. Standard
// library distributions are implementation-defined, so sampling is done
// by hand.
struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform-ish in [lo, hi]; modulo bias is irrelevant here.
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Per-slot seed so graph i depends only on (master_seed, i); parallel
// generation is order-independent.
std::uint64_t slot_seed(std::uint64_t master_seed, std::uint64_t index);

struct GenSpec {
  int n_min = 3, n_max = 8;
  int edges_min = 4, edges_max = 16;
  int mult_cap = 2;
  int lambda_min = 1;  // rejection filter; <= 0 disables it
  std::uint64_t master_seed = 1;
  long long count = 0;
  int attempt_budget = 200;  // rejection retries before a slot gives up
};

struct GenSlot {
  std::optional<MultiGraph> graph;  // empty when the slot gave up
  std::uint64_t seed = 0;
};

// Draws one slot. Deterministic in (spec, index).
GenSlot generate_one(const GenSpec& spec, std::uint64_t index);

// Sequential convenience over all slots.
std::vector<GenSlot> generate(const GenSpec& spec);

// Exhaustive labeled enumeration of loop-free multigraphs on n vertices
// with at most max_edges edges and per-pair multiplicity at most mult_cap.
// No isomorphism reduction. Guarded at n <= 6.
void enumerate_small(int n, int max_edges, int mult_cap,
                     const std::function<void(const MultiGraph&)>& visit);

}  // namespace treepack
