#include <vector>

#include "doctest.h"
#include "pdim/encoding.hpp"
#include "pdim/errors.hpp"
#include "pdim/latin.hpp"

using namespace pdim;

namespace {

LatinSquare square_from(std::vector<std::vector<int>> rows) {
  LatinSquare s;
  s.order = static_cast<int>(rows.size());
  for (auto& r : rows) s.cells.insert(s.cells.end(), r.begin(), r.end());
  return s;
}

}  // namespace

TEST_CASE("order 3 pair is the cyclic construction") {
  MolsPair p = construct_mols(3);
  CHECK(p.a.cells == square_from({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}).cells);
  CHECK(p.b.cells == square_from({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}).cells);
}

TEST_CASE("order 4 pair comes from GF(4)") {
  MolsPair p = construct_mols(4);
  CHECK(p.a.cells == square_from({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}).cells);
  CHECK(p.b.cells == square_from({{0, 2, 3, 1}, {1, 3, 2, 0}, {2, 0, 1, 3}, {3, 1, 0, 2}}).cells);
}

TEST_CASE("latin and orthogonality predicates") {
  MolsPair p = construct_mols(5);
  CHECK(is_latin(p.a));
  CHECK(is_latin(p.b));
  CHECK(are_orthogonal(p.a, p.b));
  CHECK(rows_meet(p.a, p.b));

  LatinSquare broken = p.a;
  broken.at(0, 0) = broken.at(0, 1);  // repeated symbol in row 0
  CHECK(!is_latin(broken));

  // a square is never orthogonal to itself (only m distinct ordered pairs),
  // and its own distinct rows never meet (columns carry distinct symbols)
  CHECK(!are_orthogonal(p.a, p.a));
  CHECK(!rows_meet(p.a, p.a));
}

TEST_CASE("every constructible order up to 24 passes the full property check") {
  for (int m = 3; m <= 24; ++m) {
    if (m % 2 == 1 || m % 4 == 0) {
      MolsPair p = construct_mols(m);
      CHECK(p.order == m);
      CHECK_NOTHROW(check_mols(p));
    } else {
      CHECK_THROWS_AS(construct_mols(m), BadOrder);
    }
  }
  CHECK_THROWS_AS(construct_mols(2), BadOrder);
  CHECK_THROWS_AS(construct_mols(1), BadOrder);
  CHECK_THROWS_AS(construct_mols(0), BadOrder);
}

TEST_CASE("choose_ols_order bumps unconstructible targets") {
  CHECK(choose_ols_order(1) == 3);
  CHECK(choose_ols_order(2) == 3);
  CHECK(choose_ols_order(3) == 3);
  CHECK(choose_ols_order(4) == 4);
  CHECK(choose_ols_order(5) == 5);
  CHECK(choose_ols_order(6) == 7);
  CHECK(choose_ols_order(10) == 11);
  CHECK(choose_ols_order(12) == 12);
  CHECK_THROWS_AS(choose_ols_order(0), InvalidArgument);
  // the bump always lands on a constructible order
  for (int c = 1; c <= 40; ++c) {
    int m = choose_ols_order(c);
    CHECK(m >= c);
    CHECK_NOTHROW(construct_mols(m));
  }
}

TEST_CASE("product construction composes orders") {
  MolsPair p = mols_product(construct_mols(3), construct_mols(4));
  CHECK(p.order == 12);
  CHECK_NOTHROW(check_mols(p));
}

TEST_CASE("triple clique codes encode 3K_t") {
  for (int t : {3, 4, 5}) {
    TripleCliqueCode code = encode_triple_clique(t, construct_mols(t));
    CHECK(code.order == t);
    Graph g = triple_clique_graph(t);
    Encoding e = triple_clique_encoding(code);
    CHECK(e.length() == t);
    CHECK(verify_encoding(g, e).valid);
    // copy 0 is the constant rows
    for (int j = 0; j < t; ++j)
      for (int c = 0; c < t; ++c) CHECK(code.row(0, j)[c] == j);
  }
  CHECK_THROWS_AS(encode_triple_clique(4, construct_mols(3)), InvalidArgument);
}

TEST_CASE("triple clique rows behave per the three-case analysis") {
  int t = 4;
  TripleCliqueCode code = encode_triple_clique(t, construct_mols(t));
  for (int c1 = 0; c1 < 3; ++c1)
    for (int j1 = 0; j1 < t; ++j1)
      for (int c2 = 0; c2 < 3; ++c2)
        for (int j2 = 0; j2 < t; ++j2) {
          if (c1 == c2 && j1 == j2) continue;
          int agree = 0;
          for (int c = 0; c < t; ++c)
            if (code.row(c1, j1)[c] == code.row(c2, j2)[c]) ++agree;
          if (c1 == c2)
            CHECK(agree == 0);  // same copy: disagree everywhere
          else
            CHECK(agree >= 1);  // different copies: meet somewhere
        }
}
