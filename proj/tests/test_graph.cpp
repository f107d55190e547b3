#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "pdim/errors.hpp"
#include "pdim/generators.hpp"
#include "pdim/graph.hpp"

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

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("graph construction and id addressing") {
  Graph g(std::vector<int>{9, 4, 7});
  CHECK(g.n() == 3);
  CHECK(g.ids() == std::vector<int>{4, 7, 9});  // sorted
  CHECK(g.id_at(0) == 4);
  CHECK(g.contains(7));
  CHECK(!g.contains(5));
  CHECK(g.index_of(9) == 2);
  CHECK_THROWS_AS(g.index_of(5), UnknownVertex);

  g.add_edge(4, 9);
  CHECK(g.m() == 1);
  CHECK(g.has_edge(9, 4));
  CHECK(g.has_edge_idx(0, 2));
  CHECK(!g.has_edge(4, 7));
}

TEST_CASE("add_edge rejects self-loops, duplicates, unknown ids") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(1, 0), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(0, 3), UnknownVertex);
}

TEST_CASE("edges are id pairs, u < v, lexicographic") {
  Graph g(std::vector<int>{2, 5, 8});
  g.add_edge(8, 2);
  g.add_edge(5, 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{2, 5}, {2, 8}});
}

TEST_CASE("connected_components ordered by size desc then min id") {
  Graph g(7);  // {0,1,2} path, {3,4} edge, {5}, {6}
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
  CHECK(comps[1] == std::vector<int>{3, 4});
  CHECK(comps[2] == std::vector<int>{5});
  CHECK(comps[3] == std::vector<int>{6});
}

TEST_CASE("induced_subgraph keeps ids and inside edges") {
  Graph g = path(5);
  Graph h = induced_subgraph(g, {1, 2, 4});
  CHECK(h.ids() == std::vector<int>{1, 2, 4});
  CHECK(h.m() == 1);
  CHECK(h.has_edge(1, 2));
  CHECK(!h.has_edge(2, 4));
}

TEST_CASE("with_clique fills exactly the missing pairs") {
  Graph g = path(4);
  Graph h = with_clique(g, {0, 2, 3});
  CHECK(h.has_edge(0, 2));
  CHECK(h.has_edge(0, 3));
  CHECK(h.has_edge(2, 3));    // already there
  CHECK(h.m() == g.m() + 2);  // 0-2 and 0-3 added
  CHECK(h.ids() == g.ids());
}

TEST_CASE("degeneracy of standard graphs") {
  CHECK(degeneracy_ordering(path(6)).k == 1);
  CHECK(degeneracy_ordering(cycle(5)).k == 2);
  CHECK(degeneracy_ordering(complete(4)).k == 3);
  Graph star(6);
  for (int i = 1; i < 6; ++i) star.add_edge(0, i);
  CHECK(degeneracy_ordering(star).k == 1);
  CHECK(degeneracy_ordering(Graph(3)).k == 0);
}

TEST_CASE("degeneracy order: every vertex has <= k neighbors later in the order") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_graph(20, 0.3, seed);
    DegeneracyResult d = degeneracy_ordering(g);
    REQUIRE(static_cast<int>(d.order.size()) == g.n());
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[g.index_of(d.order[i])] = i;
    for (int u = 0; u < g.n(); ++u) {
      int later = 0;
      for (int w : g.adj(u))
        if (pos[w] > pos[u]) ++later;
      CHECK(later <= d.k);
    }
  }
}

TEST_CASE("greedy coloring along reversed degeneracy order uses <= k+1 colors") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_kdegenerate(30, 2, seed);
    DegeneracyResult d = degeneracy_ordering(g);
    CHECK(d.k == 2);
    std::vector<int> rev(d.order.rbegin(), d.order.rend());
    std::vector<int> col = greedy_coloring(g, rev);
    int maxc = 0;
    for (int c : col) maxc = std::max(maxc, c);
    CHECK(maxc <= d.k);  // <= k+1 colors
    for (auto [u, v] : g.edges()) CHECK(col[g.index_of(u)] != col[g.index_of(v)]);
  }
}

TEST_CASE("bipartition roots components at their smallest id") {
  Graph g = path(4);
  auto side = bipartition(g);
  CHECK(side == std::vector<int>{0, 1, 0, 1});
  CHECK_THROWS_AS(bipartition(cycle(5)), OddCycle);
  CHECK_NOTHROW(bipartition(cycle(6)));
}

TEST_CASE("is_forest") {
  CHECK(is_forest(path(7)));
  CHECK(is_forest(Graph(4)));
  CHECK(!is_forest(cycle(4)));
  Graph two_trees(6);
  two_trees.add_edge(0, 1);
  two_trees.add_edge(2, 3);
  two_trees.add_edge(3, 4);
  CHECK(is_forest(two_trees));
}

TEST_CASE("generators produce what they promise") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph t = random_tree(40, seed);
    CHECK(t.m() == 39);
    CHECK(is_forest(t));
    CHECK(connected_components(t).size() == 1);

    Graph f = random_forest(40, seed);
    CHECK(is_forest(f));

    Graph pk = random_partial_ktree(30, 2, 0.7, seed);
    CHECK(degeneracy_ordering(pk).k <= 2);

    Graph kd = random_kdegenerate(30, 3, seed);
    CHECK(degeneracy_ordering(kd).k == 3);
  }
  CHECK(random_graph(10, 0.0, 1).m() == 0);
  CHECK(random_graph(10, 1.0, 1).m() == 45);
}
