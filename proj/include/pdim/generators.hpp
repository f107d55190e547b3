#pragma once
#include <cstdint>

#include "pdim/graph.hpp"

namespace pdim {

// Seeded instance generators for tests and the bench harness. All drawing
// goes through SplitMix64, so instances are bit-identical across platforms.

// random recursive tree: vertex v attaches to a uniform earlier vertex
Graph random_tree(int n, std::uint64_t seed);

// like random_tree, but each new vertex starts a fresh root with prob 1/16
Graph random_forest(int n, std::uint64_t seed);

// k-tree growth (new vertex joins a uniform k-clique), then each edge is
// kept with probability keep_prob; treewidth <= k by construction, and
// eliminating vertices in reverse creation order realizes width <= k
Graph random_partial_ktree(int n, int k, double keep_prob, std::uint64_t seed);

// K_{k+1} seed, then every later vertex picks exactly k distinct earlier
// neighbors; degeneracy is exactly k once n > k
Graph random_kdegenerate(int n, int k, std::uint64_t seed);

// Erdos-Renyi G(n, p)
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace pdim
