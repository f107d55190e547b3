#pragma once
#include <string>

#include "pdim/encoding.hpp"
#include "pdim/graph.hpp"
#include "pdim/treedecomp.hpp"

namespace pdim {

enum class GraphFormat { Edgelist, Dimacs, PaceGr };

// Edgelist: "n m" header then m lines "u v", 0-indexed, '#' comments.
// DIMACS:   "p edge n m" then "e u v", 1-indexed, 'c' comments.
// PACE .gr: "p tw n m" then bare "u v", 1-indexed, 'c' comments.
// Self-loops and duplicate edges are rejected. ParseError carries the line.
Graph parse_graph(const std::string& text, GraphFormat fmt);

// Canonical encoding JSON: {"codes":[[...],...],"l":L,"n":N}, rows in id
// order. Only encodings over ids 0..n-1 round-trip through this form.
std::string encoding_to_json(const Encoding& e);
Encoding encoding_from_json(const std::string& text);

// PACE .td: "s td <bags> <width+1> <n>" header, "b <index> <vertices...>"
// bag lines, then bag-index tree edges; everything 1-indexed externally.
TreeDecomposition parse_pace_td(const std::string& text, const Graph& g);
std::string write_pace_td(const TreeDecomposition& td, int n);

}  // namespace pdim
