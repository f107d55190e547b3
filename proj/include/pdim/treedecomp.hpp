#pragma once
#include <string>
#include <utility>
#include <vector>

#include "pdim/graph.hpp"

namespace pdim {

// Bags of vertex ids joined by a tree over bag indices. A normalized
// decomposition is rooted, its root bag is a single vertex, and every
// parent-child pair of bags differs by exactly one vertex.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;       // sorted id lists
  std::vector<std::pair<int, int>> edges;   // bag-index pairs
  int root = -1;                            // -1 while unrooted
  bool normalized = false;
  int width() const;  // max bag size - 1; -1 for the empty decomposition
};

struct TdReport {
  bool valid = true;
  std::vector<std::string> problems;
};

// Checks coverage, edge containment, the connected-subtree condition per
// vertex, tree shape, and (when td.normalized) the two normalization
// conditions. Never throws; everything wrong lands in problems.
TdReport validate(const Graph& g, const TreeDecomposition& td);

// Width-optimal decomposition by dynamic programming over vertex subsets
// (elimination-order formulation). Throws TooLarge beyond n = 25.
TreeDecomposition decompose_exact(const Graph& g);

// Min-fill elimination ordering; width may exceed the true treewidth.
TreeDecomposition decompose_heuristic(const Graph& g);

// Bag of each vertex = itself plus its later neighbors in the filled graph;
// parent = bag of the earliest-eliminated such neighbor. order must be a
// permutation of g's ids (BadOrder). Roots of disconnected pieces are chained.
TreeDecomposition elimination_order_to_decomposition(const Graph& g, const std::vector<int>& order);

// Rooted chain {a1} < {a1,a2} < ... grows the first bag, then every original
// tree edge becomes a remove-one-then-add-one chain. Width and validity are
// preserved; throws InvalidDecomposition on invalid input.
TreeDecomposition normalize(const Graph& g, const TreeDecomposition& td);

// Bags intersected with keep, empty bags contracted away. Valid for
// induced_subgraph(g, keep); width never grows.
TreeDecomposition restrict_decomposition(const Graph& g, const TreeDecomposition& td,
                                         const std::vector<int>& keep);

struct BagSplit {
  int bag_index = -1;
  std::vector<int> bag;                  // X_l
  std::vector<std::vector<int>> parts;   // <= 3, partition V minus X_l, no cross edges
};

// Bag minimizing the largest remaining piece (ties: smaller bag, then smaller
// index), with the pieces binned into at most 3 parts of size at most
// (n - |X_l| + 1)/2 by first-fit decreasing. Requires a valid normalized input.
BagSplit find_split_bag(const Graph& g, const TreeDecomposition& ntd);

}  // namespace pdim
