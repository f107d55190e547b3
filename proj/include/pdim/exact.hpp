#pragma once
#include <vector>

#include "pdim/encoding.hpp"
#include "pdim/graph.hpp"

namespace pdim {

struct SearchBudget {
  int max_dimension = 0;          // 0 means n (the graph order)
  long long deadline_ms = 30000;  // wall clock for the whole search
  long long max_nodes = 0;        // 0 means unlimited; deterministic cutoff
};

struct ExactResult {
  int dimension = 0;
  Encoding witness;
  bool optimal = false;  // false when the budget ran out before certifying minimality
  long long nodes = 0;
};

// Minimum encoding length by iterative deepening over l with backtracking over
// code rows in id order. Canonical symmetry breaking: in each coordinate a new
// symbol must be the smallest unused one, so symbols stay within 0..n-1.
// On budget exhaustion returns the best known witness flagged non-optimal.
ExactResult pdim_exact(const Graph& g, SearchBudget budget = {});

struct SmallEncoding {
  Encoding enc;
  bool exact;  // false when the greedy fallback was used
};

// Exact witness when the search completes in budget, greedy cover otherwise.
SmallEncoding encode_small(const Graph& g, SearchBudget budget = {});

// Covers each non-adjacent pair by some coordinate: every pass starts from
// singleton classes and merges classes of still-uncovered pairs (id order)
// whenever the union stays independent; one final coordinate carries the
// vertex id. K_n needs no covering pass, so it gets exactly the id coordinate.
Encoding greedy_equivalence_encode(const Graph& g);

}  // namespace pdim
