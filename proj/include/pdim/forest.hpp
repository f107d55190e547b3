#pragma once
#include <vector>

#include "pdim/encoding.hpp"
#include "pdim/graph.hpp"

namespace pdim {

// alpha = 1/2 + eps with alpha^2 = 1/2 - eps balances a 2-way against a 3-way
// split; it is the positive root of x^2 + x = 1 shifted by 1/2.
inline constexpr double kForestEps = 0.11803398874989485;  // sqrt(5)/2 - 1

enum class SplitKind { Two, Three };

struct SplitResult {
  int v = -1;
  SplitKind kind = SplitKind::Two;
  std::vector<std::vector<int>> parts;  // partition V \ {v}; 2 parts (may be empty) or 3
  double epsilon = 0.0;
  bool merged = false;  // 2-split produced by merging the two smallest bins
};

// Vertex minimizing the largest component of T \ {v} (ties by id), with the
// components grouped so that a 2-split has parts <= (1/2+eps)n and a 3-split
// has parts <= (1/2-eps)n. Throws NotAForest.
SplitResult find_split_vertex(const Graph& t, double eps);

// Fixed 3-coordinate table for forests on <= 3 vertices: first coordinate is
// the bipartition class, coordinate 3 carries the global vertex id.
Encoding base_case_encode(const Graph& t);

// Glue encodings of bipartite pieces that pairwise share exactly the vertex g:
// pad to a common length, rename so g is all-zeros, then append ceil(log2 k)
// coordinates that copy the piece index in binary (complemented when the
// first coordinate is 1); g gets all-2s there. k = 1 returns the piece as is.
Encoding amalgamate_bipartite(const std::vector<Encoding>& pieces, int g_id);

// Divide and conquer on split vertices; length <= 1.441*log2(n) + 3 at the
// default eps. eps must lie in [0, 0.25) so pieces shrink strictly.
Encoding encode_forest(const Graph& t, double eps = kForestEps);

}  // namespace pdim
