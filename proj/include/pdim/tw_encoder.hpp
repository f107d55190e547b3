#pragma once
#include <map>
#include <vector>

#include "pdim/encoding.hpp"
#include "pdim/graph.hpp"
#include "pdim/latin.hpp"
#include "pdim/treedecomp.hpp"

namespace pdim {

// Inputs for one conquer step: at most three clique-filled pieces that
// pairwise intersect exactly in the shared set S, valid encodings for them,
// a proper coloring of the union minus S, an encoding of S's own induced
// graph, and triple-clique codes of order choose_ols_order(num_colors).
struct GeneralAmalgamationPlan {
  Graph s_graph;                      // induced subgraph on S
  std::vector<Graph> pieces;          // S is a clique inside each
  std::vector<Encoding> piece_codes;  // valid for the corresponding piece
  std::map<int, int> coloring;        // id -> color, for union minus S
  int num_colors = 0;
  Encoding s_code;                    // valid for s_graph
  TripleCliqueCode triple;
};

// Pads the piece encodings to one length and renames coordinates so every
// shared vertex carries a constant tuple, then appends a suffix: off S a
// triple-clique row picked by (piece, color), on S the shared encoding over
// a disjoint symbol range. Verified against the union of the pieces with S
// induced as in s_graph (the clique fill is not part of the union).
Encoding amalgamate_general(const GeneralAmalgamationPlan& plan);

struct TwResult {
  Encoding enc;
  int width_used = 0;           // width of the decomposition actually used
  bool bound_certified = true;  // every base case was solved exactly
};

// Divide and conquer along a normalized tree decomposition: pick a balanced
// split bag, clique-fill it into each part, recurse with the restricted
// decomposition, and amalgamate. A supplied decomposition is validated and
// used as-is; otherwise one is computed (exact up to 25 vertices, min-fill
// beyond). Graphs on at most width+3 vertices go to the exact searcher.
TwResult encode_treewidth(const Graph& g, const TreeDecomposition* td = nullptr);

}  // namespace pdim
