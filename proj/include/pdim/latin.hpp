#pragma once
#include <cstdint>
#include <vector>

#include "pdim/encoding.hpp"
#include "pdim/graph.hpp"

namespace pdim {

struct LatinSquare {
  int order = 0;
  std::vector<int> cells;  // row-major, order x order
  int at(int i, int j) const { return cells[static_cast<size_t>(i) * order + j]; }
  int& at(int i, int j) { return cells[static_cast<size_t>(i) * order + j]; }
};

struct MolsPair {
  int order = 0;
  LatinSquare a, b;
};

bool is_latin(const LatinSquare& s);
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);
// every row of a meets every row of b: some column where they agree
bool rows_meet(const LatinSquare& a, const LatinSquare& b);
void check_mols(const MolsPair& p);  // throws PropertyViolation

MolsPair mols_odd(int m);           // a[i][j] = i+j, b[i][j] = i+2j (mod m); odd m >= 3
MolsPair mols_power_of_two(int m);  // GF(2^a): a = i+j, b = i+g*j, g the element x
MolsPair mols_product(const MolsPair& p, const MolsPair& q);  // order p.order*q.order
// dispatcher for odd m >= 3 and m % 4 == 0; rejects m % 4 == 2 (BadOrder)
MolsPair construct_mols(int m);

// smallest constructible order >= max(c, 3): bump m = 2 mod 4 by one
int choose_ols_order(int c);

// Codes for three disjoint copies of K_t: copy 0 row j is the constant tuple
// (j,...,j), copy 1 row j is row j of a, copy 2 row j is row j of b. Rows of a
// copy pairwise disagree everywhere, rows of different copies agree somewhere,
// and all 3t tuples are distinct.
struct TripleCliqueCode {
  int order = 0;                    // t
  std::vector<std::int32_t> codes;  // (3*t) x t row-major; row copy*t + j
  const std::int32_t* row(int copy, int j) const {
    return codes.data() + (static_cast<size_t>(copy) * order + j) * order;
  }
};

// Requires via.order == t; verifies the pair and the three code properties.
TripleCliqueCode encode_triple_clique(int t, const MolsPair& via);

Graph triple_clique_graph(int t);                       // 3K_t, copy i vertex j has id i*t+j
Encoding triple_clique_encoding(const TripleCliqueCode& c);

}  // namespace pdim
