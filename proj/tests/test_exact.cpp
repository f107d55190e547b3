#include <vector>

#include "doctest.h"
#include "pdim/encoding.hpp"
#include "pdim/errors.hpp"
#include "pdim/exact.hpp"
#include "pdim/generators.hpp"
#include "pdim/graph.hpp"

using namespace pdim;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Independent oracle: is there a valid length-l encoding? Enumerates every
// matrix over symbols 0..n-1 outright — no pruning, no symmetry breaking —
// so it shares no code path with the solver under test. Symbols beyond n-1
// never help: each coordinate holds at most n distinct values, and renaming
// them down to 0..n-1 preserves every agreement pattern.
bool exists_encoding_brute(const Graph& g, int l) {
  int n = g.n();
  long long total = 1;
  for (int i = 0; i < n * l; ++i) total *= n;
  std::vector<std::int32_t> flat(static_cast<size_t>(n) * l, 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long x = idx;
    for (int i = 0; i < n * l; ++i) {
      flat[i] = static_cast<std::int32_t>(x % n);
      x /= n;
    }
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        int agree = 0;
        for (int c = 0; c < l; ++c)
          if (flat[u * l + c] == flat[v * l + c]) ++agree;
        if (g.has_edge_idx(u, v))
          ok = agree == 0;
        else
          ok = agree >= 1 && agree < l;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("pdim on the small frozen instances") {
  CHECK(pdim_exact(complete(2)).dimension == 1);
  CHECK(pdim_exact(complete(3)).dimension == 1);
  CHECK(pdim_exact(complete(5)).dimension == 1);
  CHECK(pdim_exact(Graph(2)).dimension == 2);
  CHECK(pdim_exact(Graph(5)).dimension == 2);
  CHECK(pdim_exact(path(3)).dimension == 2);
  CHECK(pdim_exact(path(4)).dimension == 2);
  CHECK(pdim_exact(path(5)).dimension == 2);
  Graph k2_k1(3);  // edge plus isolated vertex
  k2_k1.add_edge(0, 1);
  CHECK(pdim_exact(k2_k1).dimension == 2);
  CHECK(pdim_exact(complete(1)).dimension == 1);
  CHECK_THROWS_AS(pdim_exact(Graph(0)), InvalidArgument);
}

TEST_CASE("solver results match the unpruned brute force on every graph with <= 4 vertices") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (int mask = 0; mask < (1 << pairs.size()); ++mask) {
      Graph g(n);
      for (size_t i = 0; i < pairs.size(); ++i)
        if (mask & (1 << i)) g.add_edge(pairs[i].first, pairs[i].second);
      ExactResult r = pdim_exact(g);
      REQUIRE(r.optimal);
      CHECK(verify_encoding(g, r.witness).valid);
      CHECK(r.witness.length() == r.dimension);
      // brute force certifies feasibility at r.dimension and infeasibility below
      if (r.dimension <= 2) {
        CHECK(exists_encoding_brute(g, r.dimension));
      }
      for (int l = 1; l < r.dimension && l <= 2; ++l) CHECK(!exists_encoding_brute(g, l));
    }
  }
}

TEST_CASE("witnesses are always valid and optimal results certified on random n=5") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_graph(5, 0.4, seed);
    ExactResult r = pdim_exact(g);
    CHECK(r.optimal);
    CHECK(verify_encoding(g, r.witness).valid);
    CHECK(r.nodes >= 0);
  }
}

TEST_CASE("node cap interrupts the search but still returns a valid witness") {
  SearchBudget b;
  b.max_nodes = 1;
  ExactResult r = pdim_exact(path(9), b);
  CHECK(!r.optimal);
  CHECK(verify_encoding(path(9), r.witness).valid);
  CHECK(r.dimension == r.witness.length());
}

TEST_CASE("max_dimension bounds the deepening but keeps sound optimality claims") {
  SearchBudget b;
  b.max_dimension = 1;
  ExactResult r = pdim_exact(path(3), b);
  // l = 1 was fully refuted, so the greedy witness at 2 is certified minimal
  CHECK(r.dimension == 2);
  CHECK(r.optimal);
}

TEST_CASE("encode_small mirrors the oracle") {
  SmallEncoding s = encode_small(path(4));
  CHECK(s.exact);
  CHECK(s.enc.length() == 2);
  CHECK(verify_encoding(path(4), s.enc).valid);
}

TEST_CASE("greedy cover is always a valid encoding") {
  CHECK(greedy_equivalence_encode(complete(6)).length() == 1);
  CHECK(greedy_equivalence_encode(Graph(6)).length() == 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_graph(12, 0.3, seed);
    Encoding e = greedy_equivalence_encode(g);
    CHECK(verify_encoding(g, e).valid);
  }
}
