#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "pdim/errors.hpp"
#include "pdim/exact.hpp"
#include "pdim/generators.hpp"
#include "pdim/graph.hpp"
#include "pdim/treedecomp.hpp"
#include "pdim/tw_encoder.hpp"

using namespace pdim;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

std::vector<std::int32_t> row_of(const Encoding& e, int id) {
  const std::int32_t* r = e.row(e.index_of(id));
  return std::vector<std::int32_t>(r, r + e.length());
}

// P_5 split at the cut vertex 2: two P_3 pieces sharing exactly {2}
GeneralAmalgamationPlan p5_plan() {
  Graph g = path(5);
  GeneralAmalgamationPlan plan;
  plan.s_graph = induced_subgraph(g, {2});
  plan.pieces.push_back(induced_subgraph(g, {0, 1, 2}));
  plan.pieces.push_back(induced_subgraph(g, {2, 3, 4}));
  for (const Graph& p : plan.pieces) plan.piece_codes.push_back(encode_small(p).enc);
  plan.coloring = {{0, 0}, {1, 1}, {3, 0}, {4, 1}};
  plan.num_colors = 2;
  plan.s_code = Encoding({2}, 1);
  plan.triple = encode_triple_clique(3, construct_mols(3));
  return plan;
}

}  // namespace

TEST_CASE("amalgamation across a cut vertex reassembles P_5") {
  GeneralAmalgamationPlan plan = p5_plan();
  Encoding out = amalgamate_general(plan);
  CHECK(out.n() == 5);
  CHECK(out.length() == 5);  // pieces take 2 coordinates, the suffix 3
  CHECK(verify_encoding(path(5), out).valid);

  // the shared vertex is constant on the prefix and carries the offset
  // shared code on the suffix; off-S suffixes are triple-clique rows
  CHECK(row_of(out, 2) == std::vector<std::int32_t>{2, 2, 3, 3, 3});
  std::vector<std::int32_t> v0 = row_of(out, 0);
  CHECK(std::vector<std::int32_t>(v0.begin() + 2, v0.end()) == std::vector<std::int32_t>{0, 0, 0});
  std::vector<std::int32_t> v3 = row_of(out, 3);
  CHECK(std::vector<std::int32_t>(v3.begin() + 2, v3.end()) == std::vector<std::int32_t>{0, 1, 2});
  std::vector<std::int32_t> v4 = row_of(out, 4);
  CHECK(std::vector<std::int32_t>(v4.begin() + 2, v4.end()) == std::vector<std::int32_t>{1, 2, 0});
}

TEST_CASE("amalgamation over a two-vertex non-adjacent shared set reassembles C_6") {
  Graph g = cycle(6);
  GeneralAmalgamationPlan plan;
  plan.s_graph = induced_subgraph(g, {0, 3});
  plan.pieces.push_back(with_clique(induced_subgraph(g, {0, 1, 2, 3}), {0, 3}));
  plan.pieces.push_back(with_clique(induced_subgraph(g, {0, 3, 4, 5}), {0, 3}));
  int big = 0;
  for (const Graph& p : plan.pieces) {
    plan.piece_codes.push_back(encode_small(p).enc);
    big = std::max(big, plan.piece_codes.back().length());
  }
  plan.coloring = {{1, 0}, {2, 1}, {4, 0}, {5, 1}};
  plan.num_colors = 2;
  plan.s_code = encode_small(plan.s_graph).enc;  // a non-edge: dimension 2
  plan.triple = encode_triple_clique(3, construct_mols(3));

  Encoding out = amalgamate_general(plan);
  // the clique fill {0,3} is glue only: the result encodes the plain C_6
  CHECK(verify_encoding(g, out).valid);
  CHECK(out.length() == big + 3);
  for (int c = 0; c < big; ++c) {
    CHECK(out.get(0, c) == out.index_of(0));  // shared rows go constant on the prefix
    CHECK(out.get(3, c) == out.index_of(3));
  }
}

TEST_CASE("amalgamation rejects malformed plans") {
  {
    GeneralAmalgamationPlan plan = p5_plan();
    plan.triple = encode_triple_clique(4, construct_mols(4));
    CHECK_THROWS_AS(amalgamate_general(plan), InvalidArgument);
  }
  {
    GeneralAmalgamationPlan plan = p5_plan();
    plan.pieces[1] = induced_subgraph(path(5), {3, 4});  // shared vertex 2 gone
    plan.piece_codes[1] = encode_small(plan.pieces[1]).enc;
    CHECK_THROWS_AS(amalgamate_general(plan), SharedVertexMissing);
  }
  {
    GeneralAmalgamationPlan plan = p5_plan();
    plan.pieces[0] = induced_subgraph(path(5), {0, 1, 2, 3});  // meets piece 1 in {2,3}
    plan.piece_codes[0] = encode_small(plan.pieces[0]).enc;
    CHECK_THROWS_AS(amalgamate_general(plan), InvalidArgument);
  }
  {
    GeneralAmalgamationPlan plan = p5_plan();
    plan.piece_codes[0] = Encoding({0, 1, 2}, 1);  // all-zero rows: not injective
    CHECK_THROWS_AS(amalgamate_general(plan), InvalidPieceEncoding);
  }
  {
    GeneralAmalgamationPlan plan = p5_plan();
    plan.coloring.erase(4);
    CHECK_THROWS_AS(amalgamate_general(plan), InvalidArgument);
  }
  {
    GeneralAmalgamationPlan plan = p5_plan();
    plan.coloring[1] = 0;  // edge {0,1} now monochromatic off S
    CHECK_THROWS_AS(amalgamate_general(plan), InvalidArgument);
  }
  {
    GeneralAmalgamationPlan plan = p5_plan();
    plan.pieces.clear();
    plan.piece_codes.clear();
    CHECK_THROWS_AS(amalgamate_general(plan), InvalidArgument);
  }
}

TEST_CASE("treewidth pipeline handles trivial graphs") {
  TwResult empty = encode_treewidth(Graph(0));
  CHECK(empty.enc.n() == 0);
  CHECK(empty.enc.length() == 1);

  TwResult one = encode_treewidth(Graph(1));
  CHECK(one.enc.length() == 1);
  CHECK(verify_encoding(Graph(1), one.enc).valid);

  Graph e5(5);
  TwResult edgeless = encode_treewidth(e5);
  CHECK(edgeless.enc.length() == 2);
  for (int i = 0; i < 5; ++i) {
    CHECK(edgeless.enc.get(i, 0) == 0);
    CHECK(edgeless.enc.get(i, 1) == i);
  }
  CHECK(verify_encoding(e5, edgeless.enc).valid);
}

TEST_CASE("treewidth pipeline meets the dimension bound on paths and cycles") {
  TwResult p8 = encode_treewidth(path(8));
  CHECK(verify_encoding(path(8), p8.enc).valid);
  CHECK(p8.width_used == 1);
  CHECK(p8.bound_certified);
  CHECK(p8.enc.length() <= 12);  // (1+2) * (log2 8 + 1)

  TwResult c8 = encode_treewidth(cycle(8));
  CHECK(verify_encoding(cycle(8), c8.enc).valid);
  CHECK(c8.width_used == 2);
  CHECK(c8.bound_certified);
  CHECK(c8.enc.length() <= 16);  // (2+2) * (log2 8 + 1)
}

TEST_CASE("a supplied decomposition is validated and used as-is") {
  Graph g = path(4);
  TreeDecomposition wide;
  wide.bags = {{0, 1, 2}, {1, 2, 3}};
  wide.edges = {{0, 1}};
  TwResult r = encode_treewidth(g, &wide);
  CHECK(r.width_used == 2);
  CHECK(verify_encoding(g, r.enc).valid);

  TreeDecomposition broken;
  broken.bags = {{0, 1}, {2, 3}};
  broken.edges = {{0, 1}};
  CHECK_THROWS_AS(encode_treewidth(g, &broken), InvalidDecomposition);
}

TEST_CASE("random partial k-trees stay within the certified bound") {
  for (int t : {1, 2}) {
    for (int n : {24, 40}) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        Graph g = random_partial_ktree(n, t, 0.7, seed);
        std::vector<int> rev(g.ids().rbegin(), g.ids().rend());
        TreeDecomposition td = elimination_order_to_decomposition(g, rev);
        REQUIRE(td.width() <= t);
        TwResult r = encode_treewidth(g, &td);
        CHECK(verify_encoding(g, r.enc).valid);
        CHECK(r.width_used <= t);
        CHECK(r.bound_certified);
        CHECK(r.enc.length() <= (r.width_used + 2) * (std::log2(static_cast<double>(n)) + 1));
      }
    }
  }
}

TEST_CASE("treewidth dimension is never below the exact optimum on small graphs") {
  std::vector<Graph> instances{cycle(5), path(5), cycle(6)};
  for (const Graph& g : instances) {
    TwResult r = encode_treewidth(g);
    ExactResult ex = pdim_exact(g);
    REQUIRE(ex.optimal);
    CHECK(r.enc.length() >= ex.dimension);
  }
}
